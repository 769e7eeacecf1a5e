#include "nfp/assembly.hpp"

#include <cmath>
#include <stdexcept>

#include "nfp/lfactors.hpp"
#include "nfp/report.hpp"
#include "nfp/volumes.hpp"

namespace nfp::assembly {

namespace {

nlohmann::json satake_json(const reps::SatakeSet& s) {
  nlohmann::json j = nlohmann::json::array();
  for (const CNum& a : s.params()) j.push_back(cnum_json(a));
  return j;
}

double d(const Rat& r) { return r.to_double(); }

}  // namespace

PairData::PairData(reps::SatakeSet sigma_n, reps::GenericRep rep, int eps, long q_f)
    : sigma_n_(std::move(sigma_n)), rep_(std::move(rep)), eps_(eps), q_f_(q_f) {
  n_ = static_cast<long>(sigma_n_.rank());
  if (n_ < 1) throw std::invalid_argument("PairData: sigma_n must have rank >= 1");
  if (rep_.rank() != n_ + 1) throw std::invalid_argument("PairData: rep must have rank n + 1");
  if (eps_ != 0 && eps_ != 1) throw std::invalid_argument("PairData: eps must be 0 or 1");
  volumes::check_residue_size(q_f);
  if (q_f <= n_) throw std::invalid_argument("PairData: requires q_F > n");
  c_ = reps::conductor(rep_);
  if (c_ < 1) throw RejectedInput("PairData: rep_{n+1} must be ramified (conductor c >= 1)");
  sigma_u_ = reps::unramified_part(rep_).satake;
}

nlohmann::json PairData::to_json() const {
  return nlohmann::json{{"n", n_},
                        {"c", c_},
                        {"eps", eps_},
                        {"qf", q_f_.str()},
                        {"sigma_n", satake_json(sigma_n_)},
                        {"rep", reps::to_json(rep_)}};
}

LValues l_values(const PairData& pd) {
  using namespace lfactors;
  const long n = pd.n();
  const Rat q_e = pd.q_e();
  LValues v;
  v.rs_half = eval(rs_lfactor(pd.sigma_n(), pd.sigma_u(), q_e), 0.5);
  v.as_n_main = eval(asai_lfactor(pd.sigma_n(), parity_sign(n), pd.q_f()), 1.0);
  v.as_n_bridge = eval(asai_lfactor(pd.sigma_n(), parity_sign(n - 1), pd.q_f()), 1.0);
  v.as_u_main = eval(asai_lfactor(pd.sigma_u(), parity_sign(n + 1), pd.q_f()), 1.0);
  v.as_u_bridge = eval(asai_lfactor(pd.sigma_u(), parity_sign(n), pd.q_f()), 1.0);
  v.pair_n = eval(pair_dual_lfactor(pd.sigma_n(), q_e), 1.0);
  v.pair_u = eval(pair_dual_lfactor(pd.sigma_u(), q_e), 1.0);
  return v;
}

CNum I_closed(const PairData& pd) {
  const long n = pd.n();
  const Rat q_e = pd.q_e();
  // GL_{n-1} factors read through the displayed product: zeta_F(1) / zeta_E(1) at n = 1.
  const Rat vol = volumes::vol_gl(n, q_e) * volumes::vol_kprime_c(n, pd.c(), q_e) *
                  volumes::vol_gl_formula(n - 1, pd.q_f()) * volumes::vol_gl(n, pd.q_f()) /
                  volumes::vol_gl_formula(n - 1, q_e);
  const LValues v = l_values(pd);
  return d(vol) * v.rs_half * std::conj(v.as_n_bridge) * std::conj(v.as_u_bridge) /
         (v.pair_n * v.pair_u);
}

CNum I_assembled(const PairData& pd, const std::optional<periods::TruncationCfg>& trunc) {
  const long n = pd.n();
  const Rat q_e = pd.q_e();
  const LValues v = l_values(pd);
  const double vol_k = d(volumes::vol_gl(n, q_e) * volumes::vol_kprime_c(n, pd.c(), q_e));
  // |c_k|^{-2} = theta(W^0, W^0)
  const CNum cn_inv2 = d(volumes::vol_gl_formula(n - 1, q_e)) * v.pair_n;
  const CNum cn1_inv2 = d(volumes::vol_gl(n, q_e)) * v.pair_u;
  const CNum beta_n = periods::beta_spherical_closed(pd.sigma_n(), pd.q_f());
  CNum lambda, beta_n1;
  if (trunc) {
    lambda = periods::lambda_truncated(pd.sigma_n(), pd.rep(), q_e, *trunc).value;
    beta_n1 = periods::beta_truncated(pd.rep(), pd.q_f(), *trunc).value;
  } else {
    lambda = periods::lambda_closed(pd.sigma_n(), pd.rep(), q_e);
    beta_n1 = periods::beta_closed(pd.rep(), pd.q_f());
  }
  return vol_k * lambda * std::conj(beta_n * beta_n1) / (cn_inv2 * cn1_inv2);
}

CNum J_main(const PairData& pd) {
  if (!pd.parity_ok()) throw RejectedInput("J_main: c and eps must have the same parity");
  const LValues v = l_values(pd);
  const double C = d(volumes::constant_C(pd.n(), pd.c(), pd.q_f()));
  return C * v.rs_half / (v.as_n_main * v.as_u_main);
}

CNum J_via_bridge(const PairData& pd) {
  const Rat factor = volumes::l_eta(pd.q_f()) * volumes::c1(pd.n(), pd.c(), pd.q_f()).first;
  return d(factor) * I_closed(pd);
}

CNum alpha_newform(CNum norm, const PairData& pd) {
  if (norm.imag() != 0.0 || !(norm.real() > 0.0))
    throw std::invalid_argument("alpha_newform: norm must be real and positive");
  return norm * J_main(pd);
}

}  // namespace nfp::assembly
