#include "nfp/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nfp {

Rat::Rat(long num, long den) : v_(num, den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  v_.canonicalize();
}

Rat Rat::parse(const std::string& s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw std::invalid_argument("Rat: cannot parse '" + s + "'");
  if (v.get_den() == 0) throw std::domain_error("Rat: zero denominator");
  return Rat(v);
}

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("Rat: inverse of zero");
  return Rat(mpq_class(1 / v_));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rat(mpq_class(n, d));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

long Valuation::value() const {
  if (!v_) throw std::logic_error("Valuation: value() of +infinity");
  return *v_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) return Valuation::infinity();
  return Valuation::finite(*a.v_ + *b.v_);
}

bool operator<(const Valuation& a, const Valuation& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return *a.v_ < *b.v_;
}

std::ostream& operator<<(std::ostream& os, const Valuation& v) {
  if (v.is_infinite()) return os << "+inf";
  return os << v.value();
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_prime_power(long q) {
  if (q < 2) return false;
  long p = 2;
  while (q % p != 0) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

int legendre(const mpz_class& a, long p) {
  mpz_class pp(p);
  return mpz_legendre(a.get_mpz_t(), pp.get_mpz_t());
}

Valuation padic_valuation(const mpz_class& x, long p) {
  if (!is_prime(p)) throw std::invalid_argument("padic_valuation: p is not prime");
  if (x == 0) return Valuation::infinity();
  mpz_class pp(p), r;
  long v = static_cast<long>(mpz_remove(r.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t()));
  return Valuation::finite(v);
}

Valuation padic_valuation(const Rat& x, long p) {
  if (!is_prime(p)) throw std::invalid_argument("padic_valuation: p is not prime");
  if (x.is_zero()) return Valuation::infinity();
  return Valuation::finite(padic_valuation(x.num(), p).value() -
                           padic_valuation(x.den(), p).value());
}

void QuadExt::check_same_field(const QuadExt& o) const {
  if (u_ != o.u_) throw std::invalid_argument("QuadExt: mismatched field parameter u");
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  check_same_field(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  check_same_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  check_same_field(o);
  Rat a = a_ * o.a_ + u_ * b_ * o.b_;
  Rat b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadExt QuadExt::inverse() const {
  Rat n = norm();
  if (n.is_zero()) throw std::domain_error("QuadExt: inverse of zero");
  return QuadExt(a_ / n, -b_ / n, u_);
}

QuadExt QuadExt::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  QuadExt result = QuadExt::from_rat(Rat(1), u_);
  QuadExt base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string QuadExt::str() const {
  std::ostringstream os;
  os << a_;
  if (!b_.is_zero()) os << (b_.sign() > 0 ? "+" : "-") << (b_.sign() > 0 ? b_ : -b_) << "*sqrt(" << u_ << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

Valuation qe_valuation(const QuadExt& x, long p) {
  return min(padic_valuation(x.a(), p), padic_valuation(x.b(), p));
}

bool approx_eq(CNum x, CNum y, const ToleranceCfg& cfg) {
  return std::abs(x - y) <= cfg.abs + cfg.rel * std::max(std::abs(x), std::abs(y));
}

CNum ipow(CNum z, long e) {
  if (e < 0) {
    if (z == CNum(0.0)) throw std::domain_error("ipow: negative power of zero");
    return ipow(CNum(1.0) / z, -e);
  }
  CNum result(1.0, 0.0);
  while (e > 0) {
    if (e & 1) result *= z;
    z *= z;
    e >>= 1;
  }
  return result;
}

double rel_error(CNum x, CNum y) {
  double scale = std::max(std::abs(y), 1e-300);
  return std::abs(x - y) / scale;
}

long default_nonsquare(long p) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("default_nonsquare: p must be an odd prime");
  if (p % 4 == 3) return -1;
  for (long a = 2;; ++a)
    if (legendre(mpz_class(a), p) == -1) return a;
}

}  // namespace nfp
