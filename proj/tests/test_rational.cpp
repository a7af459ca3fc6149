#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "horomap/mat2z.hpp"
#include "horomap/rational.hpp"
#include "horomap/stern_brocot.hpp"

#include <random>

using namespace horomap;

namespace {
Rational q(long long n, long long d) { return Rational(Int(n), Int(d)); }
}  // namespace

TEST_CASE("rationals normalise to lowest terms with positive denominator") {
  CHECK(num(q(4, 6)) == 2);
  CHECK(den(q(4, 6)) == 3);
  CHECK(num(q(3, -6)) == -1);
  CHECK(den(q(3, -6)) == 2);
  CHECK(to_fraction_string(q(10, 4)) == "5/2");
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
}

TEST_CASE("fraction strings parse and round-trip") {
  CHECK(*parse_rational("5/8") == q(5, 8));
  CHECK(*parse_rational("-7/2") == q(-7, 2));
  CHECK(*parse_rational("3") == Rational(3));
  CHECK(!parse_rational("1/0").has_value());
  CHECK(!parse_rational("x/y").has_value());
  CHECK(parse_rational(to_fraction_string(q(355, 113))) == q(355, 113));
}

TEST_CASE("infinity caps the extended order") {
  const ExtRational inf = ExtRational::infinity();
  CHECK(inf.is_infinite());
  CHECK(ExtRational(q(1000000, 1)) < inf);
  CHECK(!(inf < inf));
  CHECK(inf == ExtRational::infinity());
  CHECK(inf.str() == "1/0");
}

TEST_CASE("farey sum") {
  CHECK(farey_sum(q(2, 3), q(3, 5)) == q(5, 8));
  CHECK(farey_sum(ExtRational(q(0, 1)), ExtRational::infinity()) == ExtRational(q(1, 1)));
  // 1/3 + 1/2 as consecutive entries of F_2
  const auto f2 = stern_brocot_set(2);
  REQUIRE(f2.size() == 9);
  CHECK(f2[1] == ExtRational(q(1, 3)));
  CHECK(f2[2] == ExtRational(q(1, 2)));
  CHECK(farey_sum(q(1, 3), q(1, 2)) == q(2, 5));
}

TEST_CASE("moebius action of the generators") {
  CHECK(mobius_apply(mat_L(), q(1, 1)) == q(1, 2));
  CHECK(mobius_apply(mat_S(), q(2, 1)) == q(-1, 2));
  CHECK(mobius_apply(mat_R().inverse(), q(5, 2)) == q(3, 2));
  // S(0) = 1/0
  CHECK(mobius_apply(mat_S(), ExtRational(q(0, 1))).is_infinite());
  CHECK(mobius_apply(mat_S(), ExtRational::infinity()) == ExtRational(q(0, 1)));
  CHECK(mobius_apply(mat_R(), 1.5) == doctest::Approx(2.5));
}

TEST_CASE("matrix constructor rejects determinant != 1") {
  CHECK_THROWS_AS(Mat2Z(1, 1, 1, 1), DomainError);
  CHECK(Mat2Z(2, 3, 3, 5).det() == 1);
}

TEST_CASE("deformation factor") {
  CHECK(deformation_factor(mat_S(), q(2, 1)) == q(1, 4));
  CHECK(deformation_factor(mat_R(), q(17, 3)) == Rational(1));
  CHECK(deformation_factor(mat_L(), q(1, 1)) == q(1, 4));
  CHECK(deformation_factor(mat_S(), 2.0) == doctest::Approx(0.25));
  CHECK_THROWS_AS(deformation_factor(mat_S(), q(0, 1)), PoleError);
}

TEST_CASE("deformation cocycle D[g1 g2](x) = D[g1](g2 x) D[g2](x) exactly") {
  std::mt19937_64 rng(20240511);
  std::uniform_int_distribution<int> len(1, 20), bit(0, 1), pq(1, 40);
  for (int trial = 0; trial < 200; ++trial) {
    Mat2Z g1 = mat_identity(), g2 = mat_identity();
    for (int i = len(rng); i > 0; --i) g1 = g1 * (bit(rng) ? mat_R() : mat_L());
    for (int i = len(rng); i > 0; --i) g2 = g2 * (bit(rng) ? mat_R() : mat_L());
    if (bit(rng)) g1 = g1 * mat_S();
    const Rational x(Int(pq(rng)), Int(pq(rng)));
    const Rational lhs = deformation_factor(g1 * g2, x);
    const Rational rhs =
        deformation_factor(g1, mobius_apply(g2, x)) * deformation_factor(g2, x);
    CHECK(lhs == rhs);
  }
}
