#include "nfp/orbital_rank1.hpp"

#include <stdexcept>

#include "nfp/random.hpp"

namespace nfp::orbital_rank1 {

using hermitian::EMat;
using hermitian::FieldCtx;

namespace {

constexpr long kSearchBound = 60;
constexpr long kDenBound = 12;

bool integral(const Rat& x, long p) { return padic_valuation(x, p).at_least(0); }

nlohmann::json orbit_params(const RankOneOrbit& o, long p, long c) {
  return nlohmann::json{{"p", p}, {"c", c}, {"a", o.a.str()}, {"d", o.d.str()},
                        {"y12", o.y12.str()}, {"y21", o.y21.str()}};
}

VerificationReport exact_report(std::string check, nlohmann::json params, long lhs, long rhs,
                                bool ok, std::string note = {}) {
  VerificationReport r;
  r.check = std::move(check);
  r.params = std::move(params);
  r.lhs = CNum(static_cast<double>(lhs), 0.0);
  r.rhs = CNum(static_cast<double>(rhs), 0.0);
  r.rel_err = lhs == rhs ? 0.0 : 1.0;
  r.status = ok ? Status::pass : Status::fail;
  r.note = std::move(note);
  return r;
}

}  // namespace

EMat RankOneOrbit::matrix(const FieldCtx& ctx) const {
  const QuadExt s = ctx.sqrt_u();
  return EMat::from_rows({{s * a, s * y12}, {s * y21, s * d}});
}

RankOneOrbit orbit_of(const EMat& y, const FieldCtx& ctx) {
  if (y.rows() != 2 || y.cols() != 2) throw std::invalid_argument("rank-one orbit: 2x2 matrix required");
  if (!hermitian::is_member(y, hermitian::Kind::lie_s, 0, ctx))
    throw std::invalid_argument("rank-one orbit: Y must satisfy Y + conj(Y) = 0");
  RankOneOrbit o{y(0, 0).b(), y(1, 1).b(), y(0, 1).b(), y(1, 0).b()};
  if (o.y12.is_zero() || o.y21.is_zero())
    throw std::invalid_argument("rank-one orbit: Y is not regular semisimple");
  return o;
}

long orb_s2(const EMat& y, long c, const FieldCtx& ctx) {
  if (c < 0) throw std::invalid_argument("orb_s2: c must be >= 0");
  const RankOneOrbit o = orbit_of(y, ctx);
  if (!integral(o.a, ctx.p) || !integral(o.d, ctx.p)) return 0;
  const long v12 = padic_valuation(o.y12, ctx.p).value();
  const long v21 = padic_valuation(o.y21, ctx.p).value();
  long total = 0;
  for (long k = -v21; k <= v12 - c; ++k) total += (k % 2 == 0) ? 1 : -1;
  return total;
}

long orb_u2(const EMat& x, long c, const FieldCtx& ctx) {
  if (x.rows() != 2 || x.cols() != 2) throw std::invalid_argument("orb_u2: 2x2 matrix required");
  if (!hermitian::is_member(x, hermitian::Kind::lie_u, c, ctx))
    throw std::invalid_argument("orb_u2: X is not in u(V) for J = diag(1, varpi^c)");
  if (!hermitian::is_regular_semisimple(x)) throw std::invalid_argument("orb_u2: X is not regular semisimple");
  return hermitian::is_member(x, hermitian::Kind::k_tilde, c, ctx) ? 1 : 0;
}

std::optional<QuadExt> norm_preimage(const Rat& target, const FieldCtx& ctx) {
  if (target.is_zero()) return ctx.elem(Rat(0));
  const long v = padic_valuation(target, ctx.p).value();
  if (v % 2 != 0) return std::nullopt;
  const Rat unit = target / Rat(ctx.p).pow(v);
  // a^2 - u b^2 = num * den * d^2, then z0 = (a + b sqrt u) / (d * den).
  const mpz_class w = unit.num() * unit.den();
  for (long d = 1; d <= kDenBound; ++d) {
    const mpz_class goal = w * d * d;
    for (long b = 0; b <= kSearchBound; ++b) {
      mpz_class a2 = goal + ctx.u.num() * b * b;
      if (a2 < 0 || !mpz_perfect_square_p(a2.get_mpz_t())) continue;
      mpz_class a = sqrt(a2);
      QuadExt z0 = ctx.elem(Rat(a), Rat(b)) * (Rat(d) * Rat(unit.den())).inverse();
      return z0 * Rat(ctx.p).pow(v / 2);
    }
  }
  return std::nullopt;
}

MatchResult match_rank1(const EMat& y, long c, const FieldCtx& ctx) {
  const RankOneOrbit o = orbit_of(y, ctx);
  const long v = padic_valuation(o.y12 * o.y21, ctx.p).value();
  MatchResult out;
  out.side = ((v - c) % 2 == 0) ? 0 : 1;
  if (out.side == 1) return out;
  const Rat target = -(ctx.u * o.y12 * o.y21) / Rat(ctx.p).pow(c);
  auto z = norm_preimage(target, ctx);
  if (!z) return out;
  const QuadExt s = ctx.sqrt_u();
  out.x = EMat::from_rows({{s * o.a, -(ctx.pi_pow(c) * z->conj())}, {*z, s * o.d}});
  return out;
}

std::vector<RankOneOrbit> grid_orbits(const GridCfg& g) {
  const Rat p(g.p);
  const std::vector<std::pair<Rat, Rat>> diagonals = {
      {Rat(0), Rat(0)}, {Rat(1), Rat(2)}, {p.inverse(), Rat(1)}, {Rat(3), p.pow(-2)}};
  const std::vector<long> units = {1, 2, 5};
  std::vector<RankOneOrbit> out;
  for (const auto& [a, d] : diagonals)
    for (long v12 = 0; v12 <= g.vmax; ++v12)
      for (long v21 = 0; v21 <= g.vmax; ++v21)
        for (long s : units)
          for (long t : units) {
            if (s % g.p == 0 || t % g.p == 0) continue;
            out.push_back({a, d, Rat(s) * p.pow(v12), Rat(t) * p.pow(v21)});
          }
  return out;
}

std::vector<VerificationReport> fl_check_rank1(const GridCfg& g) {
  const FieldCtx ctx(g.p);
  std::vector<VerificationReport> out;
  for (const RankOneOrbit& o : grid_orbits(g)) {
    const EMat y = o.matrix(ctx);
    nlohmann::json params = orbit_params(o, g.p, g.c);
    const long orb = orb_s2(y, g.c, ctx);
    const MatchResult m = match_rank1(y, g.c, ctx);
    params["side"] = m.side;
    if (m.side == 1) {
      out.push_back(exact_report("fl-rank1", std::move(params), orb, 0, orb == 0));
      continue;
    }
    const long lhs = hermitian::transfer_factor(y, hermitian::TransferKind::omega, ctx) * orb;
    if (!m.x) {
      out.push_back(exact_report("fl-rank1", std::move(params), lhs, 0, false,
                                 "no matching element found in the rational model"));
      continue;
    }
    const long rhs = orb_u2(*m.x, g.c, ctx);
    const bool matched = hermitian::matches(*m.x, y);
    out.push_back(exact_report("fl-rank1", std::move(params), lhs, rhs, matched && lhs == rhs,
                               matched ? "" : "constructed X does not match Y"));
  }
  return out;
}

std::vector<VerificationReport> group_version_check(const GridCfg& g, std::size_t count,
                                                    std::mt19937_64& rng) {
  const FieldCtx ctx(g.p);
  const auto xis = hermitian::norm_one_candidates(ctx, 8);
  std::vector<VerificationReport> out;
  while (out.size() < count) {
    EMat x = hermitian::sample::lie_u_integral(rng, ctx, 2, g.c, 4);
    // Push some samples outside k_tilde_c.
    if (rnd::integer(rng, 0, 2) == 0) x = ctx.elem(Rat(1, g.p)) * x;
    const QuadExt& xi0 = xis[static_cast<std::size_t>(rnd::integer(rng, 0, 7))];
    if ((EMat::identity(2, ctx.u) - x).det().is_zero()) continue;
    const EMat gm = hermitian::cayley(x, xi0);
    auto xi = hermitian::choose_xi(gm, ctx);
    if (!xi) continue;
    const EMat back = hermitian::cayley_inv(gm, *xi);
    if (!hermitian::is_regular_semisimple(back)) continue;
    const long lhs = hermitian::is_member(gm, hermitian::Kind::K_tilde, g.c, ctx) ? 1 : 0;
    const long rhs = orb_u2(back, g.c, ctx);
    nlohmann::json params{{"p", g.p}, {"c", g.c}, {"g", hermitian::to_json(gm)}, {"xi", xi->str()}};
    out.push_back(exact_report("fl-rank1-group", std::move(params), lhs, rhs, lhs == rhs));
  }
  return out;
}

}  // namespace nfp::orbital_rank1
