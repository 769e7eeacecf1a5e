#pragma once

// Truncated Iwasawa sums for the local periods beta, theta and lambda, and
// their closed forms.

#include <functional>
#include <span>

#include "nfp/numerics.hpp"
#include "nfp/reps.hpp"

namespace nfp::periods {

struct TruncationCfg {
  long depth = 40;  ///< max |f_i|
  double tail_tol = 1e-8;
};

struct SumResult {
  CNum value{0.0, 0.0};
  /// |outermost shell| / (1 - q^{-1/2}), relative to |value|.
  double tail_estimate = 0.0;
};

/// sum over dominant f in Z^m with min_part <= f_m <= ... <= f_1 <= depth of
/// delta_m^{-1}(varpi^f) * phi(f), accumulated shell by shell
/// (shell = max |f_i|).  Non-dominant f are skipped: every integrand used
/// here vanishes there.  m = 0 gives phi(()).
SumResult iwasawa_sum(std::size_t m, const Rat& q, long min_part, const TruncationCfg& trunc,
                      const std::function<CNum(std::span<const long>)>& phi);

/// vol(GL_n(O_F)) sum_f W^ess(f) delta_{F,n}^{-1}(f) (-1)^{n |f|} for a ramified
/// rep of GL_{n+1}(E).  Throws std::invalid_argument for unramified reps.
SumResult beta_truncated(const reps::GenericRep& rep, const Rat& q_f, const TruncationCfg& trunc);

/// vol(GL_n(O_F)) L(1, sigma_u, As^{(-1)^n}).
CNum beta_closed(const reps::GenericRep& rep, const Rat& q_f);

/// vol(GL_{n-1}(O_F)) sum_f W(f, 0) delta_{F,n-1}^{-1}(f) (-1)^{(n-1)|f|}.
SumResult beta_spherical_truncated(const reps::SatakeSet& sigma, const Rat& q_f,
                                   const TruncationCfg& trunc);
/// vol_gl_formula(n - 1) L(1, sigma, As^{(-1)^{n-1}}).
CNum beta_spherical_closed(const reps::SatakeSet& sigma, const Rat& q_f);

/// vol(GL_{k-1}(O_E)) sum_f |W(f, 0)|^2 delta_{E,k-1}^{-1}(f).
SumResult theta_truncated(const reps::SatakeSet& sigma, const Rat& q_e, const TruncationCfg& trunc);
/// vol_gl_formula(k - 1) L(1, sigma x conj sigma).
CNum theta_closed(const reps::SatakeSet& sigma, const Rat& q_e);

/// vol(GL_n(O_E)) sum_f W_n(f) W_{n+1}(f) delta_{E,n}^{-1}(f) at s = 0, with
/// W_{n+1} essential for ramified reps and spherical otherwise.
SumResult lambda_truncated(const reps::SatakeSet& sigma_n, const reps::GenericRep& rep,
                           const Rat& q_e, const TruncationCfg& trunc);
/// vol(GL_n(O_E)) L(1/2, sigma_n x sigma_u).
CNum lambda_closed(const reps::SatakeSet& sigma_n, const reps::GenericRep& rep, const Rat& q_e);

}  // namespace nfp::periods
