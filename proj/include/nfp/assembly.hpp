#pragma once

// Closed and assembled forms of I_sigma(1_{K'^c}) and J_pi(1_{K^c}).

#include <optional>

#include <json.hpp>

#include "nfp/numerics.hpp"
#include "nfp/periods.hpp"
#include "nfp/reps.hpp"

namespace nfp::assembly {

/// Arithmetic context (n, c, eps, q_F) and the pair sigma_n x rep_{n+1}.
class PairData {
 public:
  /// Validates: sigma_n has rank n >= 1, rep has rank n + 1 and conductor
  /// c >= 1, q_F an odd prime power > n.  Throws RejectedInput for c = 0
  /// and std::invalid_argument otherwise.  eps is not checked against c.
  PairData(reps::SatakeSet sigma_n, reps::GenericRep rep, int eps, long q_f);

  long n() const { return n_; }
  long c() const { return c_; }
  int eps() const { return eps_; }
  const Rat& q_f() const { return q_f_; }
  Rat q_e() const { return q_f_ * q_f_; }
  const reps::SatakeSet& sigma_n() const { return sigma_n_; }
  const reps::GenericRep& rep() const { return rep_; }
  const reps::SatakeSet& sigma_u() const { return sigma_u_; }
  bool parity_ok() const { return (c_ - eps_) % 2 == 0; }

  nlohmann::json to_json() const;

 private:
  reps::SatakeSet sigma_n_;
  reps::GenericRep rep_;
  reps::SatakeSet sigma_u_;
  long n_ = 0;
  long c_ = 0;
  int eps_ = 0;
  Rat q_f_;
};

/// The L-values entering the main formulas, all at the points used there.
struct LValues {
  CNum rs_half;        ///< L(1/2, sigma_n x sigma_u)
  CNum as_n_main;      ///< L(1, sigma_n, As^{(-1)^n})
  CNum as_n_bridge;    ///< L(1, sigma_n, As^{(-1)^{n-1}})
  CNum as_u_main;      ///< L(1, sigma_u, As^{(-1)^{n+1}})
  CNum as_u_bridge;    ///< L(1, sigma_u, As^{(-1)^n})
  CNum pair_n;         ///< L(1, sigma_n x conj sigma_n)
  CNum pair_u;         ///< L(1, sigma_u x conj sigma_u)
};

/// Throws lfactors::PoleError on a pole.
LValues l_values(const PairData& d);

CNum I_closed(const PairData& d);

/// vol(K'^c) |c_n|^2 |c_{n+1}|^2 lambda conj(beta_n beta_{n+1}).  With trunc
/// set, lambda and beta_{n+1} come from truncated sums; beta_n always uses
/// its closed form.
CNum I_assembled(const PairData& d, const std::optional<periods::TruncationCfg>& trunc = std::nullopt);

/// C L(1/2, sigma_n x sigma_u) / (L(1, sigma_n, As^{(-1)^n}) L(1, sigma_u, As^{(-1)^{n+1}})).
/// Throws RejectedInput when c and eps have different parity.
CNum J_main(const PairData& d);

/// L(1, eta) c1 I_closed(d).
CNum J_via_bridge(const PairData& d);

/// norm * J_main(d); norm must be real and positive.
CNum alpha_newform(CNum norm, const PairData& d);

}  // namespace nfp::assembly
