#include "doctest.h"

#include "halin/polynomial.hpp"

#include <random>
#include <stdexcept>
#include <vector>

using halin::BigInt;
using halin::GenusPoly;

namespace {

GenusPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg_dist(0, 6);
  std::uniform_int_distribution<long long> coeff_dist(0, 40);
  int deg = deg_dist(rng);
  std::vector<BigInt> c(static_cast<size_t>(deg) + 1);
  for (auto& x : c) x = coeff_dist(rng);
  return GenusPoly(c);
}

}  // namespace

TEST_CASE("addition is coefficient-wise") {
  GenusPoly a{1, 1};
  GenusPoly b{1, 3, 4};
  CHECK(a + b == GenusPoly{2, 4, 4});
  CHECK(a + GenusPoly::zero() == a);
  // phi_2 + phi_2
  CHECK(b + b == GenusPoly{2, 6, 8});
}

TEST_CASE("multiplication is convolution") {
  GenusPoly a{1, 2};
  GenusPoly b{1, 3, 4};
  CHECK(a * b == GenusPoly{1, 5, 10, 8});
  CHECK(b * GenusPoly::one() == b);
  CHECK(GenusPoly::monomial(4, 2) * GenusPoly{1, 1} == GenusPoly{0, 0, 4, 4});
}

TEST_CASE("coefficient_sum evaluates at z = 1") {
  GenusPoly e11{2, 22, 160, 424, 416};
  CHECK(e11.coefficient_sum() == 1024);
  CHECK(GenusPoly::zero().coefficient_sum() == 0);
  GenusPoly l2{1, 3, 4};
  CHECK(l2.coefficient_sum() == 8);
}

TEST_CASE("normalization strips trailing zeros") {
  GenusPoly p(std::vector<BigInt>{1, 2, 0, 0});
  CHECK(p.degree() == 1);
  CHECK(p == GenusPoly{1, 2});
  GenusPoly z(std::vector<BigInt>{0, 0});
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(z == GenusPoly::zero());
}

TEST_CASE("at() is total and zero beyond the degree") {
  GenusPoly p{5, 7};
  CHECK(p.at(0) == 5);
  CHECK(p.at(1) == 7);
  CHECK(p.at(2) == 0);
  CHECK(p.at(100) == 0);
}

TEST_CASE("halved divides every coefficient by two exactly") {
  GenusPoly p{2, 22, 160};
  CHECK(p.halved() == GenusPoly{1, 11, 80});
  GenusPoly odd{2, 3};
  CHECK_THROWS_AS(odd.halved(), std::logic_error);
}

TEST_CASE("decimal string serialization round-trips") {
  GenusPoly p{2, 22, 160, 424, 416};
  auto strs = p.to_decimal_strings();
  REQUIRE(strs.size() == 5);
  CHECK(strs[0] == "2");
  CHECK(strs[4] == "416");
  CHECK(GenusPoly::from_decimal_strings(strs) == p);
  // Large coefficients survive the round trip.
  GenusPoly big = GenusPoly::monomial(BigInt(1) << 200, 3);
  CHECK(GenusPoly::from_decimal_strings(big.to_decimal_strings()) == big);
  CHECK(GenusPoly::zero().to_decimal_strings().empty());
}

TEST_CASE("to_text renders a readable polynomial") {
  GenusPoly p{2, 22, 160};
  CHECK(p.to_text() == "2 + 22*z + 160*z^2");
  CHECK(GenusPoly::zero().to_text() == "0");
  CHECK(GenusPoly{0, 1}.to_text() == "z");
  CHECK(GenusPoly{0, 0, 1}.to_text() == "z^2");
  CHECK(GenusPoly{1, 1}.to_text() == "1 + z");
}

TEST_CASE("ring axioms hold on random inputs") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    GenusPoly a = random_poly(rng);
    GenusPoly b = random_poly(rng);
    GenusPoly c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).coefficient_sum() == a.coefficient_sum() * b.coefficient_sum());
  }
}
