#include "nfp/periods.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "nfp/lfactors.hpp"
#include "nfp/symfunc.hpp"
#include "nfp/volumes.hpp"
#include "nfp/whittaker.hpp"

namespace nfp::periods {

namespace {

double inverse_delta(std::span<const long> f, double q) {
  return std::pow(q, static_cast<double>(-symfunc::delta_exponent(f)));
}

long total(std::span<const long> f) {
  long t = 0;
  for (long v : f) t += v;
  return t;
}

double sign_pow(long k) { return (k % 2 == 0) ? 1.0 : -1.0; }

int rank_below(const reps::GenericRep& rep) { return rep.rank() - 1; }

}  // namespace

SumResult iwasawa_sum(std::size_t m, const Rat& q, long min_part, const TruncationCfg& trunc,
                      const std::function<CNum(std::span<const long>)>& phi) {
  if (trunc.depth < 1) throw std::invalid_argument("iwasawa_sum: depth must be >= 1");
  if (m == 0) return {phi({}), 0.0};
  const double qd = q.to_double();
  const auto shells = static_cast<std::size_t>(trunc.depth) + 1;
  std::vector<CNum> shell_sum(shells, CNum(0.0));
  std::vector<double> shell_abs(shells, 0.0);
  std::vector<long> f(m, 0);

  auto visit = [&](auto&& self, std::size_t i, long cap) -> void {
    if (i == m) {
      CNum term = inverse_delta(f, qd) * phi(f);
      auto shell = static_cast<std::size_t>(std::max(std::abs(f.front()), std::abs(f.back())));
      shell_sum[shell] += term;
      shell_abs[shell] += std::abs(term);
      return;
    }
    for (long v = cap; v >= min_part; --v) {
      f[i] = v;
      self(self, i + 1, v);
    }
  };
  visit(visit, 0, trunc.depth);

  SumResult out;
  for (const CNum& s : shell_sum) out.value += s;
  double tail = shell_abs.back() / (1.0 - 1.0 / std::sqrt(qd));
  double scale = std::abs(out.value);
  out.tail_estimate = scale > 0.0 ? tail / scale : tail;
  return out;
}

SumResult beta_truncated(const reps::GenericRep& rep, const Rat& q_f, const TruncationCfg& trunc) {
  if (reps::conductor(rep) == 0)
    throw std::invalid_argument("beta_truncated: unramified rep, use beta_spherical_truncated");
  const long n = rank_below(rep);
  const Rat q_e = q_f * q_f;
  auto phi = [&](std::span<const long> f) {
    return whittaker::essential_value(rep, f, q_e) * sign_pow(n * total(f));
  };
  SumResult s = iwasawa_sum(static_cast<std::size_t>(n), q_f, 0, trunc, phi);
  s.value *= volumes::vol_gl(n, q_f).to_double();
  return s;
}

CNum beta_closed(const reps::GenericRep& rep, const Rat& q_f) {
  const long n = rank_below(rep);
  const auto up = reps::unramified_part(rep);
  auto L = lfactors::asai_lfactor(up.satake, lfactors::parity_sign(n), q_f);
  return volumes::vol_gl(n, q_f).to_double() * lfactors::eval(L, 1.0);
}

SumResult beta_spherical_truncated(const reps::SatakeSet& sigma, const Rat& q_f,
                                   const TruncationCfg& trunc) {
  const long n = static_cast<long>(sigma.rank());
  if (n < 1) throw std::invalid_argument("beta_spherical_truncated: empty Satake set");
  const Rat q_e = q_f * q_f;
  std::vector<long> padded(static_cast<std::size_t>(n), 0);
  auto phi = [&](std::span<const long> f) {
    std::copy(f.begin(), f.end(), padded.begin());
    return whittaker::spherical_value(sigma, padded, q_e) * sign_pow((n - 1) * total(f));
  };
  SumResult s = iwasawa_sum(static_cast<std::size_t>(n - 1), q_f, 0, trunc, phi);
  s.value *= volumes::vol_gl(n - 1, q_f).to_double();
  return s;
}

CNum beta_spherical_closed(const reps::SatakeSet& sigma, const Rat& q_f) {
  const long n = static_cast<long>(sigma.rank());
  auto L = lfactors::asai_lfactor(sigma, lfactors::parity_sign(n - 1), q_f);
  return volumes::vol_gl_formula(n - 1, q_f).to_double() * lfactors::eval(L, 1.0);
}

SumResult theta_truncated(const reps::SatakeSet& sigma, const Rat& q_e, const TruncationCfg& trunc) {
  const long k = static_cast<long>(sigma.rank());
  if (k < 1) throw std::invalid_argument("theta_truncated: empty Satake set");
  std::vector<long> padded(static_cast<std::size_t>(k), 0);
  auto phi = [&](std::span<const long> f) {
    std::copy(f.begin(), f.end(), padded.begin());
    return CNum(std::norm(whittaker::spherical_value(sigma, padded, q_e)), 0.0);
  };
  SumResult s = iwasawa_sum(static_cast<std::size_t>(k - 1), q_e, 0, trunc, phi);
  s.value *= volumes::vol_gl(k - 1, q_e).to_double();
  return s;
}

CNum theta_closed(const reps::SatakeSet& sigma, const Rat& q_e) {
  const long k = static_cast<long>(sigma.rank());
  return volumes::vol_gl_formula(k - 1, q_e).to_double() *
         lfactors::eval(lfactors::pair_dual_lfactor(sigma, q_e), 1.0);
}

SumResult lambda_truncated(const reps::SatakeSet& sigma_n, const reps::GenericRep& rep,
                           const Rat& q_e, const TruncationCfg& trunc) {
  const long n = static_cast<long>(sigma_n.rank());
  if (rep.rank() != n + 1) throw std::invalid_argument("lambda_truncated: rank mismatch");
  const bool ramified = reps::conductor(rep) > 0;
  const reps::SatakeSet full = ramified ? reps::SatakeSet() : reps::unramified_part(rep).satake;
  std::vector<long> padded(static_cast<std::size_t>(n + 1), 0);
  auto phi = [&](std::span<const long> f) -> CNum {
    CNum w_n = whittaker::spherical_value(sigma_n, f, q_e);
    if (w_n == CNum(0.0)) return w_n;
    if (ramified) return w_n * whittaker::essential_value(rep, f, q_e);
    std::copy(f.begin(), f.end(), padded.begin());
    return w_n * whittaker::spherical_value(full, padded, q_e);
  };
  SumResult s = iwasawa_sum(static_cast<std::size_t>(n), q_e, 0, trunc, phi);
  s.value *= volumes::vol_gl(n, q_e).to_double();
  return s;
}

CNum lambda_closed(const reps::SatakeSet& sigma_n, const reps::GenericRep& rep, const Rat& q_e) {
  const long n = static_cast<long>(sigma_n.rank());
  const auto up = reps::unramified_part(rep);
  return volumes::vol_gl(n, q_e).to_double() *
         lfactors::eval(lfactors::rs_lfactor(sigma_n, up.satake, q_e), 0.5);
}

}  // namespace nfp::periods
