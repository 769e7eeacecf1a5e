#pragma once

// Local L-factors stored as inverse roots: L(s) = prod (1 - gamma * base^{-d s})^{-1}.

#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "nfp/numerics.hpp"
#include "nfp/report.hpp"
#include "nfp/reps.hpp"

namespace nfp::lfactors {

struct Factor {
  CNum gamma;
  int degree = 1;
};

/// Raised by eval() when some factor has a pole at s.
class PoleError : public std::domain_error {
 public:
  PoleError(Factor f, CNum s);
  const Factor& factor() const { return factor_; }
  CNum at() const { return s_; }

 private:
  Factor factor_;
  CNum s_;
};

class LocalLFactor {
 public:
  /// Zero inverse roots are dropped (their factor is 1).
  LocalLFactor(Rat base, std::vector<Factor> factors);

  const Rat& base() const { return base_; }
  const std::vector<Factor>& factors() const { return factors_; }

  /// Union of the factor multisets; bases must agree.
  LocalLFactor operator*(const LocalLFactor& other) const;

 private:
  Rat base_;
  std::vector<Factor> factors_;
};

inline constexpr double kPoleTolerance = 1e-12;

CNum eval(const LocalLFactor& L, CNum s);

/// L(s, sigma x tau): inverse roots alpha_i beta_j over q_E.
LocalLFactor rs_lfactor(const reps::SatakeSet& sigma, const reps::SatakeSet& tau, const Rat& q_e);

/// Asai factor over q_F: sign +1 gives {(alpha_i,1)} u {(alpha_i alpha_j,2): i<j},
/// sign -1 gives {(-alpha_i,1)} u {(alpha_i alpha_j,2): i<j}.
LocalLFactor asai_lfactor(const reps::SatakeSet& sigma, int sign, const Rat& q_f);

/// L(s, sigma x conj(sigma)): inverse roots alpha_i conj(alpha_j), all ordered pairs.
LocalLFactor pair_dual_lfactor(const reps::SatakeSet& sigma, const Rat& q_e);

/// (-1)^k as +1 / -1.
inline int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

/// Compares conj(L(1, As^{(-1)^{n-1}})) / L(1, sigma x conj sigma) with
/// L(1, As^{(-1)^n})^{-1}.  Input that is not conjugate-self-dual on the
/// unit circle is reported as rejected-input.
VerificationReport asai_cancellation_check(const reps::SatakeSet& sigma, int n_parity,
                                           const Rat& q_f, const ToleranceCfg& cfg);

nlohmann::json to_json(const LocalLFactor& L);
LocalLFactor lfactor_from_json(const nlohmann::json& j);

}  // namespace nfp::lfactors
