#include "nfp/symfunc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "nfp/linalg.hpp"

namespace nfp::symfunc {

DomWeight::DomWeight(std::vector<long> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("DomWeight: empty weight");
  if (!is_dominant(parts_)) throw std::invalid_argument("DomWeight: parts must be weakly decreasing");
}

bool DomWeight::is_dominant(std::span<const long> parts) {
  return std::is_sorted(parts.begin(), parts.end(), std::greater<>());
}

long DomWeight::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

DomWeight DomWeight::shifted(long k) const {
  std::vector<long> p = parts_;
  for (auto& v : p) v -= k;
  return DomWeight(std::move(p));
}

namespace {

double min_spread(std::span<const CNum> alpha) {
  double spread = INFINITY;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (std::size_t j = i + 1; j < alpha.size(); ++j)
      spread = std::min(spread, std::abs(alpha[i] - alpha[j]));
  return spread;
}

void check_rank(const DomWeight& lambda, std::span<const CNum> alpha) {
  if (lambda.rank() != alpha.size())
    throw std::invalid_argument("schur: weight and parameter lengths differ");
}

}  // namespace

CNum schur_bialternant(const DomWeight& lambda, std::span<const CNum> alpha) {
  check_rank(lambda, alpha);
  if (lambda.last() < 0) throw std::invalid_argument("schur_bialternant: negative part");
  const std::size_t m = alpha.size();
  std::vector<CNum> num(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      long e = lambda.parts()[j] + static_cast<long>(m - 1 - j);
      num[i * m + j] = ipow(alpha[i], e);
    }
  // Vandermonde determinant det(alpha_i^{m-j}) = prod_{i<j} (alpha_i - alpha_j).
  CNum vdm(1.0, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) vdm *= alpha[i] - alpha[j];
  return linalg::det(std::move(num), m) / vdm;
}

std::vector<CNum> complete_homogeneous(std::span<const CNum> alpha, long kmax) {
  std::vector<CNum> h(static_cast<std::size_t>(std::max(kmax, 0L)) + 1, CNum(0.0));
  h[0] = 1.0;
  for (const CNum& x : alpha)
    for (std::size_t k = 1; k < h.size(); ++k) h[k] += x * h[k - 1];
  return h;
}

CNum schur_jacobi_trudi(const DomWeight& lambda, std::span<const CNum> alpha) {
  check_rank(lambda, alpha);
  if (lambda.last() < 0) throw std::invalid_argument("schur_jacobi_trudi: negative part");
  const auto& lam = lambda.parts();
  const std::size_t m = lam.size();
  auto h = complete_homogeneous(alpha, lam.front() + static_cast<long>(m));
  std::vector<CNum> a(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      long k = lam[i] - static_cast<long>(i) + static_cast<long>(j);
      a[i * m + j] = k < 0 ? CNum(0.0) : h[static_cast<std::size_t>(k)];
    }
  return linalg::det(std::move(a), m);
}

CNum schur(const DomWeight& lambda, std::span<const CNum> alpha) {
  check_rank(lambda, alpha);
  CNum central(1.0, 0.0);
  const DomWeight* base = &lambda;
  std::optional<DomWeight> shifted;
  if (lambda.last() < 0) {
    CNum prod(1.0, 0.0);
    for (const CNum& a : alpha) {
      if (a == CNum(0.0)) throw std::domain_error("schur: zero parameter with negative weight");
      prod *= a;
    }
    central = ipow(prod, lambda.last());
    shifted = lambda.shifted(lambda.last());
    base = &*shifted;
  }
  if (min_spread(alpha) < kCoincidenceSpread) return central * schur_jacobi_trudi(*base, alpha);
  return central * schur_bialternant(*base, alpha);
}

long delta_exponent(std::span<const long> lambda) {
  const long m = static_cast<long>(lambda.size());
  long e = 0;
  for (long i = 1; i <= m; ++i) e -= lambda[static_cast<std::size_t>(i - 1)] * (m + 1 - 2 * i);
  return e;
}

std::optional<Rat> QPower::exact() const {
  if (numerator % denominator != 0) return std::nullopt;
  return q.pow(numerator / denominator);
}

double QPower::value() const {
  return std::pow(q.to_double(), static_cast<double>(numerator) / static_cast<double>(denominator));
}

QPower delta_weight(const DomWeight& lambda, const Rat& q, bool half) {
  if (q <= Rat(1)) throw std::invalid_argument("delta_weight: q must exceed 1");
  long e = delta_exponent(lambda.parts());
  QPower r{q, e, 1};
  if (half) {
    if (e % 2 == 0) r.numerator = e / 2;
    else r.denominator = 2;
  }
  return r;
}

namespace {

void check_convergent(std::span<const CNum> x) {
  for (const CNum& v : x)
    if (std::abs(v) >= 1.0) throw std::domain_error("macdonald: |x_i| >= 1, series diverges");
}

}  // namespace

CNum macdonald_sum(std::span<const CNum> x, long depth) {
  check_convergent(x);
  if (depth < 1) throw std::invalid_argument("macdonald_sum: depth must be >= 1");
  if (x.empty()) return 1.0;
  CNum total(0.0, 0.0);
  for_each_partition(x.size(), depth, [&](const std::vector<long>& lam) {
    total += schur(DomWeight(lam), x);
  });
  return total;
}

CNum macdonald_closed(std::span<const CNum> x) {
  check_convergent(x);
  CNum v(1.0, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    v /= 1.0 - x[i];
    for (std::size_t j = i + 1; j < x.size(); ++j) v /= 1.0 - x[i] * x[j];
  }
  return v;
}

}  // namespace nfp::symfunc
