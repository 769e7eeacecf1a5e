#include <doctest.h>

#include "nfp/numerics.hpp"
#include "nfp/parse.hpp"
#include "nfp/random.hpp"

using namespace nfp;

TEST_CASE("padic valuation of rationals") {
  CHECK(padic_valuation(Rat(9, 2), 3).value() == 2);
  CHECK(padic_valuation(Rat(1, 3), 3).value() == -1);
  CHECK(padic_valuation(Rat(0), 5).is_infinite());
  CHECK_THROWS_AS(padic_valuation(Rat(4), 6), std::invalid_argument);
}

TEST_CASE("valuation on the quadratic extension") {
  const Rat u(-1);
  CHECK(qe_valuation(QuadExt(Rat(3), Rat(9), u), 3).value() == 1);
  CHECK(qe_valuation(QuadExt::sqrt_u(u), 3).value() == 0);

  rnd::Engine g(7);
  for (int i = 0; i < 50; ++i) {
    auto draw = [&] {
      return QuadExt(Rat(rnd::integer(g, -40, 40), rnd::integer(g, 1, 30)),
                     Rat(rnd::integer(g, -40, 40), rnd::integer(g, 1, 30)), u);
    };
    QuadExt x = draw(), y = draw();
    if (x.is_zero() || y.is_zero()) continue;
    CHECK(qe_valuation(x * y, 3) == qe_valuation(x, 3) + qe_valuation(y, 3));
    CHECK(qe_valuation(x.conj(), 3) == qe_valuation(x, 3));
    CHECK((x * y).norm() == x.norm() * y.norm());
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK(x.conj().conj() == x);
    CHECK(x * x.inverse() == QuadExt::from_rat(Rat(1), u));
  }
}

TEST_CASE("rational arithmetic is exact") {
  rnd::Engine g(11);
  for (int i = 0; i < 50; ++i) {
    const long a = rnd::integer(g, -99, 99), b = rnd::integer(g, 1, 99);
    const long c = rnd::integer(g, -99, 99), d = rnd::integer(g, 1, 99);
    CHECK((Rat(a, b) + Rat(c, d)) * Rat(b * d) == Rat(a * d + c * b));
  }
  CHECK(Rat(6, -4) == Rat(-3, 2));
  CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
  CHECK_THROWS(Rat(1, 0));
}

TEST_CASE("approx_eq tolerance policy") {
  CHECK(approx_eq(1.0, 1.0 + 1e-14, {1e-10, 1e-12}));
  CHECK_FALSE(approx_eq(1.0, 1.1, {1e-10, 1e-12}));
  CHECK(approx_eq(0.0, 1e-13, {1e-10, 1e-12}));
}

TEST_CASE("default nonsquare") {
  CHECK(default_nonsquare(3) == -1);
  CHECK(default_nonsquare(7) == -1);
  for (long p : {5L, 13L, 17L}) CHECK(legendre(default_nonsquare(p), p) == -1);
}

TEST_CASE("command-line number syntax") {
  CHECK(parse::complex_number("2") == CNum(2, 0));
  CHECK(parse::complex_number("1+2i") == CNum(1, 2));
  CHECK(parse::complex_number("-0.5-i") == CNum(-0.5, -1));
  CHECK(parse::complex_number("3i") == CNum(0, 3));
  CHECK(parse::complex_number("1e-3+1e-3i") == CNum(1e-3, 1e-3));
  CHECK(std::abs(parse::complex_number("@0.5") - std::polar(1.0, 0.5)) < 1e-15);
  CHECK(parse::complex_list("1, -1").size() == 2);
  CHECK(parse::integer_list("2,1,0") == std::vector<long>{2, 1, 0});
  CHECK_THROWS_AS(parse::complex_number("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse::integer_list("1,,2"), std::invalid_argument);
}
