#include <doctest.h>

#include <numbers>

#include "nfp/lfactors.hpp"
#include "nfp/reps.hpp"

using namespace nfp;
using namespace nfp::reps;
using namespace nfp::lfactors;

namespace {

bool close(CNum a, CNum b, double tol = 1e-12) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

const ToleranceCfg kTol{1e-10, 1e-12};

}  // namespace

TEST_CASE("conductor from segment data") {
  CHECK(conductor(GenericRep::unramified(SatakeSet({1.0, -1.0}))) == 0);
  CHECK(conductor(GenericRep({{UnramChar{1.0}, 2}})) == 1);
  CHECK(conductor(GenericRep({{RamCusp{2, 3, "rho"}, 3}})) == 9);
  CHECK(conductor(GenericRep({{UnramChar{1.0}, 1}, {RamCusp{1, 2, "rho"}, 1}})) == 2);
  CHECK(GenericRep({{RamCusp{2, 1, ""}, 2}, {UnramChar{1.0}, 1}}).rank() == 5);
  CHECK_THROWS_AS(GenericRep({{RamCusp{1, 0, ""}, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(GenericRep({{UnramChar{1.0}, 0}}), std::invalid_argument);
}

TEST_CASE("unramified part") {
  const GenericRep ram({{RamCusp{1, 1, "a"}, 1}, {RamCusp{2, 1, "b"}, 1}});
  CHECK(unramified_part(ram).r == 0);
  CHECK(unramified_part(ram).satake.empty());

  const CNum a = std::polar(1.0, 0.3);
  const auto one = unramified_part(GenericRep({{UnramChar{a}, 1}, {RamCusp{1, 1, ""}, 1}}));
  CHECK(one.r == 1);
  CHECK(one.satake.params()[0] == a);

  // Larger |alpha| means smaller Re(t), so it comes second.
  const auto two = unramified_part(GenericRep({{UnramChar{2.0}, 1}, {UnramChar{0.5}, 1}, {RamCusp{1, 1, ""}, 1}}));
  CHECK(two.r == 2);
  CHECK(two.satake.params()[0] == CNum(0.5));
  CHECK(two.satake.params()[1] == CNum(2.0));

  const auto swapped = unramified_part(GenericRep({{RamCusp{1, 1, ""}, 1}, {UnramChar{0.5}, 1}, {UnramChar{2.0}, 1}}));
  CHECK(swapped.satake.params() == two.satake.params());
}

TEST_CASE("conjugate self-duality of Satake sets") {
  const double t = 0.7;
  CHECK(is_conjugate_selfdual(SatakeSet({std::polar(1.0, t), std::polar(1.0, -t)}), kTol));
  CHECK(is_conjugate_selfdual(SatakeSet({1.0, -1.0}), kTol));
  CHECK_FALSE(is_conjugate_selfdual(SatakeSet({2.0}), kTol));
  CHECK_FALSE(is_conjugate_selfdual(SatakeSet({std::polar(1.0, t), std::polar(1.0, t)}), kTol));
  CHECK_THROWS_AS(SatakeSet({0.0}), std::invalid_argument);
}

TEST_CASE("segment JSON round trip") {
  const GenericRep rep({{UnramChar{CNum(0.6, 0.8)}, 2}, {RamCusp{2, 3, "x"}, 1}});
  const GenericRep back = rep_from_json(to_json(rep));
  CHECK(conductor(back) == conductor(rep));
  CHECK(back.rank() == rep.rank());
  const auto j = nlohmann::json::parse(R"({"segments":[{"type":"unram","alpha":[1,0],"k":1},{"type":"ram","dim":1,"cond":2,"k":1}]})");
  CHECK(conductor(rep_from_json(j)) == 2);
}

TEST_CASE("L-factor evaluation") {
  CHECK(eval(LocalLFactor(Rat(4), {}), 0.3) == CNum(1.0));
  CHECK(close(eval(LocalLFactor(Rat(4), {{1.0, 1}}), 1.0), 4.0 / 3.0));
  CHECK_THROWS_AS(eval(LocalLFactor(Rat(5), {{1.0, 1}}), 0.0), PoleError);
  try {
    eval(LocalLFactor(Rat(5), {{1.0, 1}}), 0.0);
  } catch (const PoleError& e) {
    CHECK(e.factor().gamma == CNum(1.0));
  }
  const LocalLFactor a(Rat(9), {{0.5, 1}}), b(Rat(9), {{CNum(0, 0.3), 2}});
  CHECK(close(eval(a * b, 0.7), eval(a, 0.7) * eval(b, 0.7)));
}

TEST_CASE("Rankin-Selberg factor") {
  const CNum a(0.6, 0.8), b(0.0, 1.0);
  const auto L = rs_lfactor(SatakeSet({a}), SatakeSet({b}), Rat(9));
  REQUIRE(L.factors().size() == 1);
  CHECK(close(L.factors()[0].gamma, a * b));
  CHECK(close(eval(rs_lfactor(SatakeSet({1.0}), SatakeSet({1.0, 1.0}), Rat(4)), 0.5), 4.0));
}

TEST_CASE("Asai factors") {
  const CNum a(0.6, 0.8);
  const auto plus = asai_lfactor(SatakeSet({a}), 1, Rat(3));
  REQUIRE(plus.factors().size() == 1);
  CHECK(plus.factors()[0].gamma == a);
  const CNum i(0.0, 1.0);
  CHECK(close(eval(asai_lfactor(SatakeSet({i, -i}), -1, Rat(3)), 1.0), 81.0 / 80.0));
  CHECK(close(eval(asai_lfactor(SatakeSet({1.0, 1.0}), 1, Rat(3)), 1.0),
              eval(asai_lfactor(SatakeSet({-1.0, -1.0}), -1, Rat(3)), 1.0)));
  CHECK(close(eval(asai_lfactor(SatakeSet({1.0}), 1, Rat(3)), 1.0), 1.5));
}

TEST_CASE("Asai plus times minus") {
  const std::vector<CNum> al{std::polar(1.0, 0.4), std::polar(0.9, 2.0), CNum(-0.3, 0.2)};
  const SatakeSet s(al);
  const CNum sv(0.8, 0.1);
  const double q = 5.0;
  CNum expect = 1.0;
  const CNum t = std::pow(q, -2.0 * sv);
  for (std::size_t i = 0; i < al.size(); ++i) {
    expect /= 1.0 - al[i] * al[i] * t;
    for (std::size_t j = i + 1; j < al.size(); ++j) expect /= (1.0 - al[i] * al[j] * t) * (1.0 - al[i] * al[j] * t);
  }
  CHECK(close(eval(asai_lfactor(s, 1, Rat(5)) * asai_lfactor(s, -1, Rat(5)), sv), expect, 1e-12));
}

TEST_CASE("conjugate pairing factor") {
  CHECK(close(eval(pair_dual_lfactor(SatakeSet({std::polar(1.0, 1.1)}), Rat(9)), 1.0), 9.0 / 8.0));
  CHECK(close(eval(pair_dual_lfactor(SatakeSet({1.0, 1.0}), Rat(4)), 1.0), std::pow(4.0 / 3.0, 4)));
  CHECK(pair_dual_lfactor(SatakeSet({1.0, 1.0}), Rat(4)).factors().size() == 4);
}

TEST_CASE("Asai cancellation") {
  CHECK(asai_cancellation_check(SatakeSet({1.0}), 0, Rat(3), {1e-12, 1e-14}).status == Status::pass);
  CHECK(asai_cancellation_check(SatakeSet({1.0}), 1, Rat(3), {1e-12, 1e-14}).status == Status::pass);
  for (double t : {0.2, 1.3, 2.9}) {
    const SatakeSet s({std::polar(1.0, t), std::polar(1.0, -t)});
    CHECK(asai_cancellation_check(s, 0, Rat(7), kTol).status == Status::pass);
    CHECK(asai_cancellation_check(s, 1, Rat(7), kTol).status == Status::pass);
  }
  CHECK(asai_cancellation_check(SatakeSet({2.0}), 0, Rat(3), kTol).status == Status::rejected_input);
}

TEST_CASE("L-factor JSON round trip") {
  const auto L = asai_lfactor(SatakeSet({CNum(0.6, 0.8), CNum(0.6, -0.8)}), -1, Rat(5));
  const auto back = lfactor_from_json(to_json(L));
  CHECK(back.base() == L.base());
  CHECK(close(eval(back, 1.0), eval(L, 1.0)));
}
