#include "flatpark/series.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace flatpark;

TEST_CASE("exp of simple series") {
  CHECK(series_exp(BivariateSeries(2, 3)) == BivariateSeries::one(2, 3));

  auto ey = series_exp(BivariateSeries::y(0, 3));
  CHECK(ey.coeff(0, 0) == 1);
  CHECK(ey.coeff(0, 1) == 1);
  CHECK(ey.coeff(0, 2) == Rational(1, 2));
  CHECK(ey.coeff(0, 3) == Rational(1, 6));

  auto exy = series_exp(BivariateSeries::x(3, 3) * BivariateSeries::y(3, 3));
  CHECK(exy.coeff(2, 2) == Rational(1, 2));
  CHECK(exy.coeff(2, 1) == 0);

  CHECK_THROWS_AS(series_exp(BivariateSeries::one(1, 1)), ArgumentError);
}

TEST_CASE("exp(s) exp(-s) is one") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 4);
  for (int trial = 0; trial < 5; ++trial) {
    BivariateSeries s(3, 4);
    for (int k = 0; k <= 3; ++k) {
      for (int n = 0; n <= 4; ++n) {
        if (k + n > 0) s.set(k, n, Rational(num(rng), den(rng)));
      }
    }
    CHECK(series_exp(s) * series_exp(s * Rational(-1)) == BivariateSeries::one(3, 4));
  }
}

TEST_CASE("closed form at y = 0 is x") {
  auto f = claimed_closed_form(4, 5);
  CHECK(f.coeff(1, 0) == 1);
  for (int k = 0; k <= 4; ++k) {
    if (k != 1) CHECK(f.coeff(k, 0) == 0);
  }
}

TEST_CASE("comparison grid") {
  auto cmp = compare_gf(7, 4);
  REQUIRE(cmp.cells.size() == 32);
  CHECK(cmp.cells[0].k == 1);
  CHECK(cmp.cells[0].n == 0);
  CHECK(cmp.cells[0].claimed == 1);
  CHECK(cmp.cells[0].actual == 1);
  CHECK(cmp.cells[1].actual == 1);  // f_{2,1} / 1!
  // f_{4,2} / 3! = 4/6
  CHECK(cmp.cells[8 + 3].actual == Rational(2, 3));

  std::ostringstream text;
  write_text(text, cmp);
  CHECK(text.str().find("verdict: ") != std::string::npos);
  CHECK(to_json(cmp)["cells"].size() == 32);
  CHECK(to_json(cmp).dump() == to_json(compare_gf(7, 4)).dump());
}
