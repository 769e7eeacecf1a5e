#include "nfp/whittaker.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "nfp/symfunc.hpp"

namespace nfp::whittaker {

CNum spherical_value(const reps::SatakeSet& alpha, std::span<const long> lambda, const Rat& q_e) {
  if (lambda.size() != alpha.rank())
    throw std::invalid_argument("spherical_value: weight length differs from rank");
  if (lambda.empty()) return 1.0;
  if (!symfunc::DomWeight::is_dominant(lambda)) return 0.0;
  symfunc::DomWeight w(std::vector<long>(lambda.begin(), lambda.end()));
  return symfunc::delta_weight(w, q_e, true).value() * symfunc::schur(w, alpha.params());
}

CNum essential_value(const reps::GenericRep& rep, std::span<const long> f, const Rat& q_e) {
  const int m = rep.rank();
  if (reps::conductor(rep) == 0)
    throw std::invalid_argument("essential_value: unramified representation, use spherical_value");
  if (m < 2) throw std::invalid_argument("essential_value: rank must be at least 2");
  if (static_cast<int>(f.size()) != m - 1)
    throw std::invalid_argument("essential_value: exponent tuple must have length m - 1");
  const auto up = reps::unramified_part(rep);
  const auto r = static_cast<std::size_t>(up.r);
  for (std::size_t i = r; i < f.size(); ++i)
    if (f[i] != 0) return 0.0;
  if (r > 0 && f[r - 1] < 0) return 0.0;
  auto head = f.subspan(0, r);
  long total = 0;
  for (long v : head) total += v;
  CNum w = spherical_value(up.satake, head, q_e);
  if (w == CNum(0.0)) return w;
  // |varpi^{f_1+...+f_r}|_E^{(m-r)/2}
  return w * std::pow(q_e.to_double(), -0.5 * static_cast<double>((m - up.r) * total));
}

}  // namespace nfp::whittaker
