#pragma once

// Torus values of normalized spherical and essential Whittaker functions.

#include <span>

#include "nfp/numerics.hpp"
#include "nfp/reps.hpp"

namespace nfp::whittaker {

/// W(varpi^lambda) = delta_m(varpi^lambda)^{1/2} s_lambda(alpha), or 0 when
/// lambda is not weakly decreasing.  Requires len(lambda) = rank(alpha).
CNum spherical_value(const reps::SatakeSet& alpha, std::span<const long> lambda, const Rat& q_e);

/// W^ess(diag(varpi^{f_1}, ..., varpi^{f_{m-1}}, 1)) for a ramified rep of
/// GL_m(E).  Throws std::invalid_argument for an unramified rep or when
/// len(f) != m - 1.
CNum essential_value(const reps::GenericRep& rep, std::span<const long> f, const Rat& q_e);

}  // namespace nfp::whittaker
