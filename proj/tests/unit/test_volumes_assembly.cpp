#include <doctest.h>

#include "nfp/assembly.hpp"
#include "nfp/lfactors.hpp"
#include "nfp/volumes.hpp"

using namespace nfp;
using namespace nfp::volumes;

TEST_CASE("group volumes") {
  for (long q : {3L, 5L, 9L, 27L}) {
    CHECK(vol_gl(1, Rat(q)) == Rat(1));
    CHECK(vol_gl(0, Rat(q)) == Rat(1));
    CHECK(vol_unitary_w(1, Rat(q)) == Rat(1));
  }
  CHECK(vol_gl(2, Rat(3)) == Rat(8, 9));
  CHECK(vol_unitary_w(2, Rat(3)) == Rat(8, 9));
  CHECK(vol_kprime_c(1, 1, Rat(9)) == Rat(1, 81));
  CHECK(vol_kprime_c(0, 1, Rat(9)) == Rat(9, 8) * Rat(1, 9));
  CHECK(vol_bmK_glF(1, 1, Rat(3)) == Rat(1, 9));
  CHECK(vol_bmK_glF(1, 2, Rat(3)) == Rat(1, 81));
  CHECK_THROWS_AS(vol_kprime_c(1, 0, Rat(9)), RejectedInput);
  CHECK_THROWS_AS(vol_bmK_glF(1, 0, Rat(3)), RejectedInput);
  CHECK_THROWS_AS(vol_gl(-1, Rat(3)), std::invalid_argument);
}

TEST_CASE("finite group orders") {
  CHECK(gl_order(1, Rat(3)) == Rat(2));
  CHECK(gl_order(2, Rat(3)) == Rat(48));
  CHECK(unitary_order(1, Rat(3)) == Rat(4));
  CHECK(unitary_order(2, Rat(3)) == Rat(96));
}

TEST_CASE("c1 and C") {
  CHECK(c1(1, 1, Rat(3)) == std::pair<Rat, Rat>(Rat(9), Rat(9)));
  CHECK(c1(1, 2, Rat(3)) == std::pair<Rat, Rat>(Rat(81), Rat(81)));
  CHECK(constant_C(1, 1, Rat(3)) == Rat(1, 9));
  CHECK(constant_C(1, 3, Rat(3)) == Rat(1, 729));
  CHECK(l_eta(Rat(3)) == Rat(3, 4));
  for (long n = 1; n <= 4; ++n)
    for (long c = 1; c <= 5; ++c)
      for (long q : {3L, 5L, 7L, 9L, 27L}) {
        const auto [a, b] = c1(n, c, Rat(q));
        CHECK(a == b);
      }
  CHECK_THROWS_AS(c1(1, 0, Rat(3)), RejectedInput);
  CHECK_THROWS_AS(check_residue_size(4), std::invalid_argument);
  CHECK_THROWS_AS(check_residue_size(6), std::invalid_argument);
  CHECK_NOTHROW(check_residue_size(25));
}

TEST_CASE("dual lattice and positivity") {
  for (long n = 1; n <= 3; ++n)
    for (long c = 1; c <= 3; ++c)
      for (long q : {3L, 5L, 9L}) {
        CHECK(vol_lie_uV(n, c, Rat(q)) == Rat(q).pow(-c * n));
        CHECK(vol_unitary_v(n, c, Rat(q)) > Rat(0));
        CHECK(constant_C(n, c, Rat(q)) > Rat(0));
        CHECK(vol_K0(n, c, Rat(q)) == l_eta(Rat(q)) * vol_k0_lie(n, c, Rat(q)));
      }
}

namespace {

using reps::GenericRep;
using reps::RamCusp;
using reps::SatakeSet;
using reps::UnramChar;

assembly::PairData simple_pair(long q, int eps = 1) {
  return assembly::PairData(SatakeSet({1.0}), GenericRep({{UnramChar{1.0}, 1}, {RamCusp{1, 1, ""}, 1}}), eps, q);
}

}  // namespace

TEST_CASE("closed I is real and positive") {
  const auto pd = simple_pair(3);
  CHECK(pd.c() == 1);
  const CNum I = assembly::I_closed(pd);
  CHECK(I.real() > 0.0);
  CHECK(std::abs(I.imag()) < 1e-14);

  const CNum a = std::polar(1.0, 0.8);
  const assembly::PairData pd2(SatakeSet({a, std::conj(a)}),
                               GenericRep({{UnramChar{CNum(0, 1)}, 1}, {UnramChar{CNum(0, -1)}, 1}, {RamCusp{1, 2, ""}, 1}}),
                               0, 5);
  const CNum I2 = assembly::I_closed(pd2);
  CHECK(I2.real() > 0.0);
  CHECK(std::abs(I2.imag()) < 1e-12 * I2.real());
  const assembly::PairData swapped(SatakeSet({std::conj(a), a}), pd2.rep(), 0, 5);
  CHECK(std::abs(assembly::I_closed(swapped) - I2) < 1e-14);
}

TEST_CASE("main formula and the bridge agree") {
  const auto pd = simple_pair(3);
  const CNum J = assembly::J_main(pd), Jb = assembly::J_via_bridge(pd);
  CHECK(std::abs(J - Jb) <= 1e-12 * std::abs(J));
  CHECK(std::abs(assembly::I_assembled(pd) - assembly::I_closed(pd)) <= 1e-12 * std::abs(J));
  CHECK(std::abs(assembly::alpha_newform(1.0, pd) - J) == 0.0);
  CHECK(std::abs(assembly::alpha_newform(2.0, pd) - 2.0 * J) == 0.0);
  CHECK_THROWS_AS(assembly::alpha_newform(-1.0, pd), std::invalid_argument);
}

TEST_CASE("pair data validation") {
  CHECK_THROWS_AS(assembly::J_main(simple_pair(3, 0)), RejectedInput);
  CHECK_THROWS_AS(assembly::PairData(SatakeSet({1.0}), GenericRep::unramified(SatakeSet({1.0, 1.0})), 0, 3),
                  RejectedInput);
  CHECK_THROWS_AS(assembly::PairData(SatakeSet({1.0}), GenericRep({{RamCusp{1, 1, ""}, 1}}), 1, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(simple_pair(4), std::invalid_argument);
  // sigma_n = {-1} against the unramified part {1}: L(1/2) is finite but As^- at 1 is fine;
  // sigma_n = {sqrt(q_E)} hits a pole of L(1/2, sigma_n x sigma_u).
  const assembly::PairData pole(SatakeSet({3.0}), GenericRep({{UnramChar{1.0}, 1}, {RamCusp{1, 1, ""}, 1}}), 1, 3);
  CHECK_THROWS_AS(assembly::I_closed(pole), lfactors::PoleError);
}
