#include "doctest.h"

#include "halin/genfun.hpp"
#include "halin/recurrence.hpp"

#include <stdexcept>
#include <vector>

using halin::BigInt;
using halin::bundle_for;
using halin::extract_E;
using halin::GenusPoly;
using halin::k2_bundle;
using halin::LaurentSeries;
using halin::lambda_poly;
using halin::Lstar_series;
using halin::ParamTuple;
using halin::phi_series;
using halin::SeriesBundle;
using halin::transfer_apply;
using halin::UnsupportedError;

namespace {

GenusPoly as_poly(const std::vector<BigInt>& coeffs) {
  return GenusPoly(coeffs);
}

}  // namespace

TEST_CASE("series inversion: geometric series") {
  LaurentSeries s(1, {8}, 0);
  s.add_term({0}, 0, 1).add_term({1}, 0, -1);
  LaurentSeries inv = s.invert();
  for (int m = 0; m <= 8; ++m) {
    auto c = inv.coeff({m});
    REQUIRE(c.size() == 1);
    CHECK(c[0] == 1);
  }
}

TEST_CASE("series inversion: the constant one") {
  LaurentSeries s(1, {4}, 2);
  s.add_term({0}, 0, 1);
  LaurentSeries inv = s.invert();
  CHECK(as_poly(inv.coeff({0})) == GenusPoly{1});
  CHECK(inv.coeff({1}).empty());
}

TEST_CASE("series inversion: the two-block denominator") {
  // 1/(1 - 2t - 4tz - 16 z^2 t^2): coefficient of t^1 is 2 + 4z.
  LaurentSeries d(1, {4}, 4);
  d.add_term({0}, 0, 1)
      .add_term({1}, 0, -2)
      .add_term({1}, 1, -4)
      .add_term({2}, 2, -16);
  LaurentSeries inv = d.invert();
  CHECK(as_poly(inv.coeff({1})) == GenusPoly{2, 4});
  CHECK(as_poly(inv.coeff({0})) == GenusPoly{1});
  // t^2: (2+4z)^2 + 16z^2 = 4 + 16z + 32z^2.
  CHECK(as_poly(inv.coeff({2})) == GenusPoly{4, 16, 32});
}

TEST_CASE("series inversion rejects non-unit constants and t-free tails") {
  LaurentSeries two(1, {4}, 2);
  two.add_term({0}, 0, 2);
  CHECK_THROWS_AS(two.invert(), std::invalid_argument);

  LaurentSeries no_const(1, {4}, 2);
  no_const.add_term({1}, 0, 1);
  CHECK_THROWS_AS(no_const.invert(), std::invalid_argument);

  LaurentSeries zfree(1, {4}, 2);
  zfree.add_term({0}, 0, 1).add_term({0}, 1, 1);  // 1 + z: tail has t-degree 0
  CHECK_THROWS_AS(zfree.invert(), std::invalid_argument);
}

TEST_CASE("ladder generating function") {
  LaurentSeries ls = Lstar_series(15, 16);
  CHECK(as_poly(ls.coeff({1})) == GenusPoly{2, 2});
  CHECK(as_poly(ls.coeff({2})) == GenusPoly{4, 12, 16});
  for (int m = 1; m <= 15; ++m)
    CHECK(as_poly(ls.coeff({m})) == (BigInt(1) << m) * halin::L_poly(m));
  CHECK(ls.coeff({0}).empty());
}

TEST_CASE("Ringel-ladder generating function") {
  LaurentSeries ph = phi_series(15, 16);
  for (int m = 2; m <= 15; ++m)
    CHECK(as_poly(ph.coeff({m})) == halin::phi_poly(m));
  CHECK(ph.coeff({0}).empty());
  CHECK(ph.coeff({1}).empty());
}

TEST_CASE("two-variable bundle ties out against the recurrences") {
  SeriesBundle b = k2_bundle({4, 4}, 12);
  for (int m1 = 1; m1 <= 4; ++m1)
    for (int m2 = 1; m2 <= 4; ++m2) {
      ParamTuple p{m1, m2};
      CHECK(as_poly(b.E1.coeff({m1, m2})) == halin::euler_genus_poly(p));
      CHECK(as_poly(b.lam1.coeff({m1, m2})) == (BigInt(1) << m2) * lambda_poly(p));
      if (m2 >= 2) {
        CHECK(b.E2.coeff({m1, m2}) == b.E1.coeff({m1, m2}));
        CHECK(b.lam2.coeff({m1, m2}) == b.lam1.coeff({m1, m2}));
      } else {
        CHECK(as_poly(b.E2.coeff({m1, m2})).is_zero());
      }
    }
  CHECK(as_poly(b.E1.coeff({1, 1})) == GenusPoly{2, 22, 160, 424, 416});
}

TEST_CASE("bundle series never dip into zero or negative t-powers") {
  SeriesBundle b2 = k2_bundle({2, 2}, 8);
  for (const LaurentSeries* s : {&b2.lam1, &b2.lam2, &b2.E1, &b2.E2})
    CHECK(s->min_t_exponent() >= 1);
  SeriesBundle b3 = transfer_apply(b2, {2, 2, 2}, 8);
  for (const LaurentSeries* s : {&b3.lam1, &b3.lam2, &b3.E1, &b3.E2})
    CHECK(s->min_t_exponent() >= 1);
}

TEST_CASE("the transfer step appends one block") {
  SeriesBundle b2 = k2_bundle({2, 3}, 12);
  SeriesBundle b3 = transfer_apply(b2, {2, 3, 4}, 12);
  CHECK(as_poly(b3.E1.coeff({1, 1, 1})) == halin::euler_genus_poly(ParamTuple{1, 1, 1}));
  CHECK(as_poly(b3.E1.coeff({1, 2, 3})) == halin::euler_genus_poly(ParamTuple{1, 2, 3}));
  CHECK(as_poly(b3.E1.coeff({2, 3, 2})) == halin::euler_genus_poly(ParamTuple{2, 3, 2}));
  for (int m3 = 1; m3 <= 4; ++m3)
    CHECK(as_poly(b3.lam1.coeff({2, 2, m3})) ==
          (BigInt(1) << m3) * lambda_poly(ParamTuple{2, 2, m3}));
}

TEST_CASE("transfer guard windows are enforced") {
  SeriesBundle b2 = k2_bundle({2, 2}, 8);
  CHECK_THROWS_AS(transfer_apply(b2, {5, 1, 1}, 8), std::invalid_argument);
  CHECK_THROWS_AS(transfer_apply(b2, {2, 4, 1}, 8), std::invalid_argument);
}

TEST_CASE("coefficient extraction matches the recurrence engine") {
  for (int m1 = 1; m1 <= 5; ++m1)
    for (int m2 = 1; m2 <= 5; ++m2) {
      ParamTuple p{m1, m2};
      CHECK(extract_E(p) == halin::euler_genus_poly(p));
    }
  for (int m1 = 1; m1 <= 3; ++m1)
    for (int m2 = 1; m2 <= 3; ++m2)
      for (int m3 = 1; m3 <= 3; ++m3) {
        ParamTuple p{m1, m2, m3};
        CHECK(extract_E(p) == halin::euler_genus_poly(p));
      }
  CHECK(extract_E(ParamTuple{1, 1, 1, 1}) ==
        halin::euler_genus_poly(ParamTuple{1, 1, 1, 1}));
  CHECK(extract_E(ParamTuple{2, 1, 1, 2}) ==
        halin::euler_genus_poly(ParamTuple{2, 1, 1, 2}));
}

TEST_CASE("larger truncation windows do not change extracted coefficients") {
  ParamTuple p{2, 3};
  CHECK(extract_E(p, {6, 6}) == extract_E(p));
  CHECK(extract_E(p, {3, 4}) == extract_E(p));
  ParamTuple q{1, 2, 1};
  CHECK(extract_E(q, {4, 4, 4}) == extract_E(q));
}

TEST_CASE("extraction domain limits") {
  CHECK_THROWS_AS(extract_E(ParamTuple{3}), UnsupportedError);
  CHECK_THROWS_AS(bundle_for(ParamTuple{3}), UnsupportedError);
  CHECK_THROWS_AS(extract_E(ParamTuple{2, 0}), std::invalid_argument);
  // Window below m_i.
  CHECK_THROWS_AS(extract_E(ParamTuple{2, 2}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(extract_E(ParamTuple{2, 2}, {2}), std::invalid_argument);
}

TEST_CASE("series shape mismatches are rejected") {
  LaurentSeries a(1, {4}, 2);
  LaurentSeries b(2, {4, 4}, 2);
  a.add_term({1}, 0, 1);
  b.add_term({1, 0}, 0, 1);
  CHECK_THROWS_AS(a * b, std::logic_error);
  CHECK_THROWS_AS(a + b, std::logic_error);
}
