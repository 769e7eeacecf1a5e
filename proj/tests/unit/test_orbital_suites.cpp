#include <doctest.h>

#include <algorithm>

#include "nfp/orbital_rank1.hpp"
#include "nfp/suites.hpp"

using namespace nfp;
using namespace nfp::hermitian;
using namespace nfp::orbital_rank1;

namespace {

const FieldCtx kCtx(3);

EMat orbit(Rat a, Rat d, Rat y12, Rat y21) { return RankOneOrbit{a, d, y12, y21}.matrix(kCtx); }

}  // namespace

TEST_CASE("linear-side orbital integrals") {
  CHECK(orb_s2(orbit(1, 2, 3, 1), 1, kCtx) == 1);
  CHECK(orb_s2(orbit(1, 2, 9, 2), 1, kCtx) == 0);  // k in {0, 1}
  CHECK(orb_s2(orbit(1, 2, 3, Rat(1, 3)), 1, kCtx) == 0);  // k in {-1, 0}
  CHECK(orb_s2(orbit(1, 2, 27, 1), 0, kCtx) == 0);
  CHECK(orb_s2(orbit(1, 2, 9, 1), 0, kCtx) == 1);
  CHECK(orb_s2(orbit(Rat(1, 3), 2, 3, 1), 1, kCtx) == 0);
  CHECK(orb_s2(orbit(0, 0, 1, 1), 1, kCtx) == 0);  // empty range
  const RankOneOrbit o = orbit_of(orbit(4, 5, 6, 7), kCtx);
  CHECK(o.a == Rat(4));
  CHECK(o.y21 == Rat(7));
  CHECK_THROWS_AS(orbit_of(orbit(1, 1, 0, 1), kCtx), std::invalid_argument);
}

TEST_CASE("unitary-side orbital integrals") {
  const QuadExt s = kCtx.sqrt_u();
  const EMat x = EMat::from_rows({{kCtx.elem(0), s * Rat(3)}, {s, kCtx.elem(0)}});
  CHECK(orb_u2(x, 1, kCtx) == 1);
  const EMat far = EMat::from_rows({{kCtx.elem(0), s}, {s * Rat(1, 3), kCtx.elem(0)}});
  CHECK(orb_u2(far, 1, kCtx) == 0);
  CHECK_THROWS_AS(orb_u2(EMat::from_rows({{kCtx.elem(1), kCtx.elem(0)}, {kCtx.elem(0), kCtx.elem(0)}}), 1, kCtx),
                  std::invalid_argument);
}

TEST_CASE("rank-one matching") {
  const auto m0 = match_rank1(orbit(1, 2, 3, 1), 1, kCtx);
  CHECK(m0.side == 0);
  REQUIRE(m0.x.has_value());
  CHECK(is_member(*m0.x, Kind::lie_u, 1, kCtx));
  CHECK(matches(*m0.x, orbit(1, 2, 3, 1)));
  const auto m1 = match_rank1(orbit(1, 2, 1, 1), 1, kCtx);
  CHECK(m1.side == 1);
  CHECK_FALSE(m1.x.has_value());
  const auto z = norm_preimage(Rat(5), kCtx);
  REQUIRE(z.has_value());
  CHECK(z->norm() == Rat(5));
  CHECK_FALSE(norm_preimage(Rat(3), kCtx).has_value());
}

TEST_CASE("rank-one fundamental lemma grid") {
  for (long p : {3L, 7L})
    for (long c : {0L, 1L}) {
      const auto reports = fl_check_rank1(GridCfg{p, c, 4});
      CHECK(!reports.empty());
      CHECK(suites::count(reports, Status::fail) == 0);
    }
}

TEST_CASE("suite runs are deterministic and sorted") {
  suites::RunConfig cfg;
  cfg.seed = 7;
  auto a = suites::run("asai-cancel", cfg);
  auto b = suites::run("asai-cancel", cfg);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(to_json(a[i]).dump() == to_json(b[i]).dump());
  auto resorted = a;
  std::reverse(resorted.begin(), resorted.end());
  suites::sort_reports(resorted);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(resorted[i].params.dump() == a[i].params.dump());
  CHECK(suites::exit_code(a) == 0);
  CHECK(suites::count(a, Status::rejected_input) == 1);
}

TEST_CASE("exit codes") {
  VerificationReport ok, soft, bad;
  soft.status = Status::soft_discrepancy;
  bad.status = Status::fail;
  CHECK(suites::exit_code({ok, soft}) == 0);
  CHECK(suites::exit_code({ok, soft, bad}) == 1);
  CHECK(suites::exit_code({}) == 0);
}

TEST_CASE("suite configuration validation") {
  suites::RunConfig cfg;
  cfg.qf = 3;
  cfg.n = 1;
  cfg.c = 0;
  CHECK_THROWS_AS(suites::validate("main-theorem", cfg), RejectedInput);
  cfg.c = 1;
  cfg.eps = 0;
  CHECK_THROWS_AS(suites::validate("main-theorem", cfg), RejectedInput);
  cfg.eps = 1;
  CHECK_NOTHROW(suites::validate("main-theorem", cfg));
  CHECK_THROWS_AS(suites::run("no-such-suite", cfg), std::invalid_argument);
  cfg.qf = 4;
  CHECK_THROWS_AS(suites::validate("volumes", cfg), std::invalid_argument);
}
