#pragma once

// Exact orbital integrals for n = 1 and the rank-one transfer checks.

#include <optional>
#include <random>
#include <vector>

#include "nfp/hermitian.hpp"
#include "nfp/report.hpp"

namespace nfp::orbital_rank1 {

/// Y = sqrt(u) [[a, y12], [y21, d]] in s_2.
struct RankOneOrbit {
  Rat a, d, y12, y21;
  hermitian::EMat matrix(const hermitian::FieldCtx& ctx) const;
};

/// Reads (a, d, y12, y21) back from Y; throws std::invalid_argument unless
/// Y is a 2x2 element of s_2 with y12 y21 != 0.
RankOneOrbit orbit_of(const hermitian::EMat& y, const hermitian::FieldCtx& ctx);

/// sum_{k=-v21}^{v12-c} (-1)^k when a, d are integral, else 0.
long orb_s2(const hermitian::EMat& y, long c, const hermitian::FieldCtx& ctx);

/// 1 iff X lies in k_tilde_c.  Throws std::invalid_argument unless X is a
/// regular semisimple element of u(V) for J = diag(1, varpi^c).
long orb_u2(const hermitian::EMat& x, long c, const hermitian::FieldCtx& ctx);

struct MatchResult {
  int side = 0;
  std::optional<hermitian::EMat> x;
};

/// Side 0 iff nu(y12 y21) = c (mod 2); on side 0 builds
/// X = [[sqrt(u) a, -varpi^c conj(z)], [z, sqrt(u) d]] with
/// -varpi^c Nm(z) = u y12 y21, when a rational z is found.
MatchResult match_rank1(const hermitian::EMat& y, long c, const hermitian::FieldCtx& ctx);

/// Solves Nm(z) = target over Q(sqrt u) by a bounded search.
std::optional<QuadExt> norm_preimage(const Rat& target, const hermitian::FieldCtx& ctx);

struct GridCfg {
  long p = 3;
  long c = 1;
  long vmax = 4;
};

/// Representatives covering every stratum (integrality of the diagonal,
/// v12, v21) with v12, v21 <= vmax, several unit parts each.
std::vector<RankOneOrbit> grid_orbits(const GridCfg& g);

/// One report per grid orbit: side 0 checks omega(Y) orb_s2 = orb_u2(X);
/// side 1 checks orb_s2 = 0.  Integer equality.
std::vector<VerificationReport> fl_check_rank1(const GridCfg& g);

/// Group version: for g = cayley(X, xi) with det(g + xi) a unit,
/// [g in K_tilde^c] = orb_u2(cayley_inv(g, xi)).
std::vector<VerificationReport> group_version_check(const GridCfg& g, std::size_t count,
                                                    std::mt19937_64& rng);

}  // namespace nfp::orbital_rank1
