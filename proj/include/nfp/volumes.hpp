#pragma once

// Haar-measure volumes of compact open subgroups and the constants c1, C,
// all exact in the residue field size q.

#include <utility>

#include "nfp/numerics.hpp"

namespace nfp::volumes {

/// (1 - q^{-1})^{-1}
Rat zeta1(const Rat& q);
/// L(1, eta) = (1 + q_F^{-1})^{-1}
Rat l_eta(const Rat& q_f);

/// |GL_m(F_q)| and |U_m(F_q)| (finite-group orders).
Rat gl_order(long m, const Rat& q);
Rat unitary_order(long m, const Rat& q);

/// vol(GL_m(O)) = zeta(1) prod_{i=1}^m (1 - q^{-i}); 1 for m = 0.
Rat vol_gl(long m, const Rat& q);

/// The same product read literally, so m = 0 gives zeta(1).  This is the
/// value the closed period formulas carry for GL_{n-1} when n = 1.
Rat vol_gl_formula(long m, const Rat& q);

/// vol(K'^c_{n+1}) = zeta_E(1) q_E^{-c(n+1)} prod_{i=1}^n (1 - q_E^{-i}).
/// Throws RejectedInput for c < 1.
Rat vol_kprime_c(long n, long c, const Rat& q_e);

/// vol(bmK^c_{n+1} cap GL_{n+1}(O_F)), same shape in base q_F.
Rat vol_bmK_glF(long n, long c, const Rat& q_f);

/// vol(U(W)(O_F)) = L(1, eta) prod_{i=1}^m (1 - (-q)^{-i}).
Rat vol_unitary_w(long m, const Rat& q_f);

/// vol(U(V)(O_F)) = L(1, eta) q^{-cn} (1 + q^{-1}) prod_{i=1}^n (1 - (-q)^{-i}).
Rat vol_unitary_v(long n, long c, const Rat& q_f);

/// vol(u(V)(O_F)) = q^{-cn} from self-duality of the trace pairing.
Rat vol_lie_uV(long n, long c, const Rat& q_f);
/// vol(k_0) = q^{-cn-n^2-1}
Rat vol_k0_lie(long n, long c, const Rat& q_f);
/// vol(K_0) = L(1, eta) vol(k_0)
Rat vol_K0(long n, long c, const Rat& q_f);

/// c1 in its volume-quotient form (first) and its zeta-product form (second).
std::pair<Rat, Rat> c1(long n, long c, const Rat& q_f);

/// C = vol(K_n)^2 L(1, eta) q_F^{-c(n+1)} (1 + q_F^{-n}).
Rat constant_C(long n, long c, const Rat& q_f);

/// Throws std::invalid_argument unless q is an odd prime power >= 3.
void check_residue_size(long q);

}  // namespace nfp::volumes
