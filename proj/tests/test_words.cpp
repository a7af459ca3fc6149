#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "horomap/lr_word.hpp"

#include <numeric>
#include <random>

using namespace horomap;

namespace {
Rational q(long long n, long long d) { return Rational(Int(n), Int(d)); }
}  // namespace

TEST_CASE("word to matrix") {
  CHECK(word_to_matrix(LRWord::from_string("LRLR")) == Mat2Z(2, 3, 3, 5));
  CHECK(word_to_matrix(LRWord{}) == mat_identity());
  // RL multiplied by hand: R*L = (1 1; 0 1)(1 0; 1 1) = (2 1; 1 1)
  CHECK(word_to_matrix(LRWord::from_string("RL")) == Mat2Z(2, 1, 1, 1));
}

TEST_CASE("coding of rationals") {
  CHECK(coding_of_rational(q(5, 8)).str() == "LRLR");
  CHECK(coding_of_rational(q(1, 2)).str() == "L");
  CHECK(coding_of_rational(q(2, 1)).str() == "R");
  CHECK(coding_of_rational(q(2, 3)).str() == "LR");
  CHECK(coding_of_rational(q(1, 1)).empty());
  // first letter is L exactly on (0,1)
  CHECK(coding_of_rational(q(3, 7)).letters.front() == Letter::L);
  CHECK(coding_of_rational(q(7, 3)).letters.front() == Letter::R);
}

TEST_CASE("word reversal against the diagonal swap") {
  const Mat2Z m = word_to_matrix(coding_of_rational(q(5, 8)));
  CHECK(reverse_matrix(m) == Mat2Z(5, 3, 3, 2));
  CHECK(reverse_matrix(mat_identity()) == mat_identity());
  CHECK(word_to_matrix(reverse_word(coding_of_rational(q(2, 3)))).str() ==
        word_to_matrix(LRWord::from_string("RL")).str());
  CHECK_THROWS_AS(reverse_matrix(mat_S()), DomainError);
}

TEST_CASE("reversal relation on all words of length <= 14") {
  for (int n = 0; n <= 14; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
      LRWord w;
      for (int i = 0; i < n; ++i)
        w.letters.push_back((bits >> i) & 1 ? Letter::R : Letter::L);
      const Mat2Z lhs = word_to_matrix(reverse_word(w));
      const Mat2Z rhs = reverse_matrix(word_to_matrix(w));
      REQUIRE(lhs == rhs);
      REQUIRE(word_to_matrix(w).det() == 1);
    }
  }
}

TEST_CASE("reversal relation on random words of length <= 60") {
  std::mt19937_64 rng(987654321);
  std::uniform_int_distribution<int> len(0, 60), bit(0, 1);
  for (int trial = 0; trial < 10000; ++trial) {
    LRWord w;
    for (int i = len(rng); i > 0; --i)
      w.letters.push_back(bit(rng) ? Letter::R : Letter::L);
    const Mat2Z m = word_to_matrix(w);
    REQUIRE(word_to_matrix(reverse_word(w)) == reverse_matrix(m));
    REQUIRE(reverse_matrix(reverse_matrix(m)) == m);
  }
}

TEST_CASE("coding round-trips through the mediant for num+den <= 500") {
  for (long long p = 1; p + 1 <= 500; ++p) {
    for (long long den_ = 1; p + den_ <= 500; ++den_) {
      if (std::gcd(p, den_) != 1) continue;
      const Rational x = q(p, den_);
      const LRWord w = coding_of_rational(x);
      REQUIRE(word_to_rational(w) == x);
    }
  }
}

TEST_CASE("extended Farey map") {
  CHECK(extended_farey(q(1, 2)) == Rational(1));
  CHECK(extended_farey(q(5, 2)) == q(3, 2));
  CHECK(extended_farey(Rational(1)) == Rational(0));
  CHECK(extended_farey(0.25) == doctest::Approx(1.0 / 3.0));
  // both daughters of p/q map back to p/q
  for (long long p = 1; p <= 30; ++p)
    for (long long d = 1; d <= 30; ++d) {
      if (std::gcd(p, d) != 1) continue;
      CHECK(extended_farey(q(p, p + d)) == q(p, d));
      CHECK(extended_farey(q(p + d, d)) == q(p, d));
    }
}

TEST_CASE("extended Farey inverts the generator actions") {
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<long long> pq(1, 200);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational x = q(pq(rng), pq(rng));
    CHECK(extended_farey(mobius_apply(mat_L(), x)) == x);
    CHECK(extended_farey(mobius_apply(mat_R(), x)) == x);
  }
}

TEST_CASE("coding prefixes of reals") {
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  CHECK(coding_prefix_of_real(golden, 4).str() == "RLRL");
  CHECK(coding_prefix_of_real(0.25, 2).str() == "LL");
  CHECK(coding_prefix_of_real(7.4, 7).str() == "RRRRRRR");
  CHECK_THROWS_AS(coding_prefix_of_real(1.0, 3), DegenerateError);
  CHECK_THROWS_AS(coding_prefix_of_real(0.5, 3), DegenerateError);
}
