#include <doctest.h>

#include "nfp/lfactors.hpp"
#include "nfp/periods.hpp"
#include "nfp/random.hpp"
#include "nfp/volumes.hpp"
#include "nfp/whittaker.hpp"

using namespace nfp;
using namespace nfp::reps;
using namespace nfp::periods;

namespace {

bool close(CNum a, CNum b, double tol = 1e-10) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

const TruncationCfg kTrunc{40, 1e-10};

}  // namespace

TEST_CASE("spherical Whittaker values") {
  const CNum a(0.6, 0.8), b(0.0, 1.0);
  const SatakeSet s({a, b});
  CHECK(close(whittaker::spherical_value(s, std::vector<long>{0, 0}, Rat(9)), 1.0));
  CHECK(whittaker::spherical_value(s, std::vector<long>{0, 1}, Rat(9)) == CNum(0.0));
  CHECK(close(whittaker::spherical_value(s, std::vector<long>{1, 0}, Rat(9)), (a + b) / 3.0));
}

TEST_CASE("spherical values are central-covariant") {
  rnd::Engine g(21);
  for (int i = 0; i < 20; ++i) {
    const SatakeSet s({rnd::unit_circle(g), rnd::unit_circle(g), rnd::unit_circle(g)});
    const long k = rnd::integer(g, -2, 2);
    const std::vector<long> lam{2, 1, 0}, shifted{2 + k, 1 + k, k};
    CHECK(close(whittaker::spherical_value(s, shifted, Rat(25)),
                ipow(s.product(), k) * whittaker::spherical_value(s, lam, Rat(25))));
  }
}

TEST_CASE("essential Whittaker values") {
  const CNum a(0.6, 0.8);
  const GenericRep rep({{UnramChar{a}, 1}, {RamCusp{1, 2, ""}, 1}});
  CHECK(close(whittaker::essential_value(rep, std::vector<long>{0}, Rat(9)), 1.0));
  for (long f = 0; f < 5; ++f)
    CHECK(close(whittaker::essential_value(rep, std::vector<long>{f}, Rat(9)), ipow(a, f) * std::pow(3.0, -f)));
  CHECK(whittaker::essential_value(rep, std::vector<long>{-1}, Rat(9)) == CNum(0.0));

  const GenericRep rep3({{UnramChar{a}, 1}, {RamCusp{2, 1, ""}, 1}});
  CHECK(whittaker::essential_value(rep3, std::vector<long>{1, 1}, Rat(9)) == CNum(0.0));
  CHECK_THROWS_AS(whittaker::essential_value(GenericRep::unramified(SatakeSet({1.0, 1.0})), std::vector<long>{0}, Rat(9)),
                  std::invalid_argument);
  CHECK_THROWS_AS(whittaker::essential_value(rep, std::vector<long>{0, 0}, Rat(9)), std::invalid_argument);
}

TEST_CASE("essential values against a direct reimplementation") {
  rnd::Engine g(4);
  for (int i = 0; i < 100; ++i) {
    const long m = rnd::integer(g, 2, 4);
    const long r = rnd::integer(g, 0, m - 1);
    std::vector<Segment> segs;
    std::vector<CNum> al;
    for (long k = 0; k < r; ++k) {
      al.push_back(rnd::unit_circle(g));
      segs.push_back({UnramChar{al.back()}, 1});
    }
    segs.push_back({RamCusp{static_cast<int>(m - r), 1, ""}, 1});
    const GenericRep rep(segs);
    std::vector<long> f(static_cast<std::size_t>(m - 1), 0);
    long cap = 3;
    for (long k = 0; k < r; ++k) cap = f[static_cast<std::size_t>(k)] = rnd::integer(g, 0, cap);
    if (rnd::integer(g, 0, 4) == 0) f.back() += 1;  // sometimes off the support
    // Direct reading: support, then delta^{1/2} s_f(alpha) |varpi^|f||^{(m-r)/2} with q_E = 9.
    bool support = true;
    for (long k = r; k < m - 1; ++k) support = support && f[static_cast<std::size_t>(k)] == 0;
    for (long k = 1; k < r; ++k) support = support && f[static_cast<std::size_t>(k - 1)] >= f[static_cast<std::size_t>(k)];
    CNum expect = 0.0;
    if (support && (r == 0 || f[static_cast<std::size_t>(r - 1)] >= 0)) {
      const std::vector<long> head(f.begin(), f.begin() + r);
      long size = 0;
      for (long v : head) size += v;
      const SatakeSet su = unramified_part(rep).satake;
      expect = r == 0 ? CNum(1.0)
                      : whittaker::spherical_value(su, head, Rat(9)) * std::pow(3.0, -static_cast<double>((m - r) * size));
    }
    CHECK(close(whittaker::essential_value(rep, f, Rat(9)), expect, 1e-12));
  }
}

TEST_CASE("beta examples") {
  const GenericRep r1({{UnramChar{1.0}, 1}, {RamCusp{1, 1, ""}, 1}});
  CHECK(close(beta_truncated(r1, Rat(3), kTrunc).value, 0.75));
  CHECK(close(beta_closed(r1, Rat(3)), 0.75, 1e-14));
  const CNum a(0.6, 0.8);
  const GenericRep ra({{UnramChar{a}, 1}, {RamCusp{1, 1, ""}, 1}});
  CHECK(close(beta_truncated(ra, Rat(3), kTrunc).value, 1.0 / (1.0 + a / 3.0)));
  const CNum i(0.0, 1.0);
  const GenericRep r2({{UnramChar{i}, 1}, {UnramChar{-i}, 1}, {RamCusp{1, 1, ""}, 1}});
  CHECK(close(beta_closed(r2, Rat(3)), 0.9, 1e-14));
  CHECK(close(beta_truncated(r2, Rat(3), kTrunc).value, 0.9));
  const GenericRep r0({{RamCusp{3, 1, ""}, 1}});
  CHECK(close(beta_truncated(r0, Rat(5), kTrunc).value, volumes::vol_gl(2, Rat(5)).to_double(), 1e-14));
  CHECK_THROWS_AS(beta_truncated(GenericRep::unramified(SatakeSet({1.0, 1.0})), Rat(3), kTrunc), std::invalid_argument);
}

TEST_CASE("spherical beta examples") {
  CHECK(close(beta_spherical_truncated(SatakeSet({-1.0}), Rat(3), kTrunc).value, 1.0));
  const CNum a(0.6, 0.8);
  const SatakeSet s({a, std::conj(a)});
  const CNum expect = 1.0 / ((1.0 + a / 3.0) * (1.0 + std::conj(a) / 3.0));
  CHECK(close(beta_spherical_truncated(s, Rat(3), kTrunc).value, expect));
  CHECK(close(beta_spherical_truncated(SatakeSet({1.0, 1.0}), Rat(3), kTrunc).value, 9.0 / 16.0));
}

TEST_CASE("theta examples") {
  CHECK(close(theta_truncated(SatakeSet({std::polar(1.0, 0.4)}), Rat(9), kTrunc).value, 1.0));
  CHECK(close(theta_truncated(SatakeSet({1.0, 1.0}), Rat(4), TruncationCfg{80, 1e-12}).value, 80.0 / 27.0));
  const CNum i(0.0, 1.0);
  const SatakeSet s({i, -i});
  const CNum pair = lfactors::eval(lfactors::pair_dual_lfactor(s, Rat(9)), 1.0);
  CHECK(close(theta_truncated(s, Rat(9), kTrunc).value, (1.0 - 1.0 / 81.0) * pair));
}

TEST_CASE("lambda examples") {
  const CNum a(0.6, 0.8), b(0.0, 1.0);
  const GenericRep rb({{UnramChar{b}, 1}, {RamCusp{1, 1, ""}, 1}});
  CHECK(close(lambda_truncated(SatakeSet({a}), rb, Rat(9), kTrunc).value, 1.0 / (1.0 - a * b / 3.0)));
  const GenericRep unr = GenericRep::unramified(SatakeSet({1.0, 1.0}));
  CHECK(close(lambda_truncated(SatakeSet({1.0}), unr, Rat(4), TruncationCfg{80, 1e-12}).value, 4.0));
  const SatakeSet sn({a, std::conj(a)});
  const GenericRep r1({{UnramChar{b}, 1}, {RamCusp{2, 1, ""}, 1}});
  const CNum expect = 1.0 / ((1.0 - a * b / 3.0) * (1.0 - std::conj(a) * b / 3.0));
  CHECK(close(lambda_truncated(sn, r1, Rat(9), kTrunc).value, volumes::vol_gl(2, Rat(9)).to_double() * expect));
  CHECK(close(lambda_closed(sn, r1, Rat(9)), volumes::vol_gl(2, Rat(9)).to_double() * expect, 1e-13));
}

TEST_CASE("tail estimate bounds the change from a deeper sum") {
  const CNum a = std::polar(1.0, 0.9);
  const GenericRep rep({{UnramChar{a}, 1}, {UnramChar{std::conj(a)}, 1}, {RamCusp{1, 1, ""}, 1}});
  for (long depth : {10L, 15L, 20L}) {
    const auto shallow = beta_truncated(rep, Rat(3), TruncationCfg{depth, 1e-8});
    const auto deep = beta_truncated(rep, Rat(3), TruncationCfg{depth + 10, 1e-8});
    CHECK(std::abs(shallow.value - deep.value) / std::abs(deep.value) <= shallow.tail_estimate);
  }
}

TEST_CASE("closed forms use the displayed volume product for GL_0") {
  const SatakeSet s({1.0});
  const double zeta3 = 1.5;
  CHECK(close(beta_spherical_closed(s, Rat(3)), zeta3 * 1.5, 1e-14));
  CHECK(volumes::vol_gl(0, Rat(3)) == Rat(1));
  CHECK(volumes::vol_gl_formula(0, Rat(3)) == Rat(3, 2));
}
