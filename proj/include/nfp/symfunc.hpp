#pragma once

// Dominant weights, Schur polynomials and the Macdonald summation identity.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nfp/numerics.hpp"

namespace nfp::symfunc {

/// Weakly decreasing integer tuple (lambda_1 >= ... >= lambda_m), m >= 1.
class DomWeight {
 public:
  /// Throws std::invalid_argument unless parts is nonempty and weakly decreasing.
  explicit DomWeight(std::vector<long> parts);
  static bool is_dominant(std::span<const long> parts);

  const std::vector<long>& parts() const { return parts_; }
  std::size_t rank() const { return parts_.size(); }
  long size() const;  ///< lambda_1 + ... + lambda_m
  long last() const { return parts_.back(); }
  /// lambda - k * (1, ..., 1)
  DomWeight shifted(long k) const;

 private:
  std::vector<long> parts_;
};

/// Spread below which two parameters count as coincident for the bialternant.
inline constexpr double kCoincidenceSpread = 1e-12;

/// Laurent Schur polynomial s_lambda(alpha).  Negative weights are handled
/// by factoring out (prod alpha_i)^{lambda_m}; the bialternant is used unless
/// two parameters are within kCoincidenceSpread, in which case Jacobi-Trudi
/// is used.
CNum schur(const DomWeight& lambda, std::span<const CNum> alpha);

/// det(alpha_i^{lambda_j + m - j}) / det(alpha_i^{m - j}); lambda_m >= 0.
CNum schur_bialternant(const DomWeight& lambda, std::span<const CNum> alpha);

/// det(h_{lambda_i - i + j}); lambda_m >= 0.  Well defined at coincident
/// and zero parameters.
CNum schur_jacobi_trudi(const DomWeight& lambda, std::span<const CNum> alpha);

/// Complete homogeneous symmetric polynomials h_0 .. h_kmax at alpha.
std::vector<CNum> complete_homogeneous(std::span<const CNum> alpha, long kmax);

/// sum_i -lambda_i (m + 1 - 2i): the exponent of q in delta_m(varpi^lambda).
long delta_exponent(std::span<const long> lambda);

/// q^(numerator / denominator) with denominator 1 or 2.
struct QPower {
  Rat q;
  long numerator = 0;
  long denominator = 1;

  /// Exact value when the exponent is an integer.
  std::optional<Rat> exact() const;
  double value() const;
};

/// delta_m(varpi^lambda) = prod_i q^{-lambda_i (m + 1 - 2i)}, or its square
/// root when half is set.
QPower delta_weight(const DomWeight& lambda, const Rat& q, bool half);

/// Truncated sum of s_lambda(x) over lambda with at most len(x) parts and
/// lambda_1 <= depth.  Throws std::domain_error if some |x_i| >= 1.
CNum macdonald_sum(std::span<const CNum> x, long depth);

/// prod_i (1 - x_i)^{-1} prod_{i<j} (1 - x_i x_j)^{-1}.
CNum macdonald_closed(std::span<const CNum> x);

/// Visits every partition with at most `parts` parts and lambda_1 <= max_part,
/// in lexicographic order.
template <typename Fn>
void for_each_partition(std::size_t parts, long max_part, Fn&& fn) {
  std::vector<long> lam(parts, 0);
  auto rec = [&](auto&& self, std::size_t i, long cap) -> void {
    if (i == parts) {
      fn(std::as_const(lam));
      return;
    }
    for (long v = 0; v <= cap; ++v) {
      lam[i] = v;
      self(self, i + 1, v);
    }
    lam[i] = 0;
  };
  if (parts == 0) {
    fn(std::as_const(lam));
    return;
  }
  rec(rec, 0, max_part);
}

}  // namespace nfp::symfunc
