#pragma once

// Exact rationals, the quadratic extension Q(sqrt u), complex doubles and
// p-adic valuations.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace nfp {

/// Exact rational number in canonical form (den > 0, gcd(num, den) = 1).
class Rat {
 public:
  Rat() = default;
  Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(const mpz_class& v) : v_(v) {}
  explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  static Rat parse(const std::string& s);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }
  double to_double() const { return v_.get_d(); }
  std::string str() const { return v_.get_str(); }

  Rat inverse() const;
  /// this^e for any integer e (e < 0 requires this != 0).
  Rat pow(long e) const;

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_{0};
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// p-adic valuation value; an empty value stands for +infinity.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  static Valuation finite(long v) { return Valuation(v); }

  bool is_infinite() const { return !v_.has_value(); }
  /// Precondition: finite.
  long value() const;

  friend Valuation operator+(const Valuation& a, const Valuation& b);
  friend bool operator==(const Valuation& a, const Valuation& b) = default;
  /// Ordering with +infinity as the largest element.
  friend bool operator<(const Valuation& a, const Valuation& b);
  friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
  friend Valuation min(const Valuation& a, const Valuation& b) { return b < a ? b : a; }
  bool at_least(long k) const { return is_infinite() || *v_ >= k; }

 private:
  Valuation() = default;
  explicit Valuation(long v) : v_(v) {}
  std::optional<long> v_;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

bool is_prime(long p);
/// True iff q = p^k for a prime p and k >= 1.
bool is_prime_power(long q);
/// Legendre symbol (a/p) for odd prime p; returns 0, 1 or -1.
int legendre(const mpz_class& a, long p);

/// v_p(x); throws std::invalid_argument if p is not prime.
Valuation padic_valuation(const Rat& x, long p);
Valuation padic_valuation(const mpz_class& x, long p);

/// Element a + b*sqrt(u) of E = F(sqrt u).  All elements taking part in one
/// computation share the same nonsquare u.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(Rat a, Rat b, Rat u) : a_(std::move(a)), b_(std::move(b)), u_(std::move(u)) {}
  static QuadExt from_rat(Rat a, Rat u) { return QuadExt(std::move(a), Rat(0), std::move(u)); }
  static QuadExt sqrt_u(Rat u) { return QuadExt(Rat(0), Rat(1), std::move(u)); }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& u() const { return u_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  QuadExt conj() const { return QuadExt(a_, -b_, u_); }
  Rat norm() const { return a_ * a_ - u_ * b_ * b_; }
  Rat trace() const { return a_ + a_; }
  QuadExt inverse() const;
  QuadExt pow(long e) const;
  std::string str() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a_, -x.b_, x.u_); }
  friend QuadExt operator*(QuadExt x, const Rat& r) {
    x.a_ *= r;
    x.b_ *= r;
    return x;
  }
  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.u_ == y.u_;
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

 private:
  void check_same_field(const QuadExt& o) const;
  Rat a_{0};
  Rat b_{0};
  Rat u_{-1};
};

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

/// nu(a + b sqrt u) = min(v_p(a), v_p(b)); valid when u is a p-unit
/// nonsquare mod p, so that E/F is unramified at p.
Valuation qe_valuation(const QuadExt& x, long p);

using CNum = std::complex<double>;

struct ToleranceCfg {
  double rel = 1e-10;
  double abs = 1e-12;
};

/// |x - y| <= abs + rel * max(|x|, |y|).
bool approx_eq(CNum x, CNum y, const ToleranceCfg& cfg);

/// z^e by repeated squaring; e < 0 requires z != 0.
CNum ipow(CNum z, long e);

/// Relative error |x - y| / max(|y|, tiny).
double rel_error(CNum x, CNum y);

/// Smallest-magnitude nonsquare unit mod p used as the default u
/// (-1 when p = 3 mod 4).
long default_nonsquare(long p);

}  // namespace nfp
