#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hwcls/scalar.hpp"
#include "test_util.hpp"

using namespace hwcls;

TEST_CASE("integer congruence follows the coset model") {
  const ScalarValue tau_m1("tau", Rational(-1));
  const ScalarValue tau_3("tau", Rational(3));
  const ScalarValue plain_5(Rational(5));
  const ScalarValue half(Rational(1, 2));
  const ScalarValue two(Rational(2));

  CHECK(int_congruent(tau_m1, tau_3));
  CHECK_FALSE(int_congruent(tau_m1, plain_5));
  CHECK_FALSE(int_congruent(half, two));
}

TEST_CASE("shift moves only the offset") {
  const ScalarValue tau_m1("tau", Rational(-1));
  CHECK(shift(tau_m1, -1) == ScalarValue("tau", Rational(-2)));
  CHECK(shift(ScalarValue(Rational(5)), 0) == ScalarValue(Rational(5)));
  CHECK(shift(ScalarValue(Rational(7)), -7) == ScalarValue(Rational(0)));
}

TEST_CASE("integer congruence is an equivalence relation") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ScalarValue> sample;
    for (int i = 0; i < 6; ++i)
      sample.push_back(testutil::random_scalar(rng));
    for (const auto& a : sample) {
      CHECK(int_congruent(a, a));
      for (const auto& b : sample) {
        CHECK(int_congruent(a, b) == int_congruent(b, a));
        for (const auto& c : sample)
          if (int_congruent(a, b) && int_congruent(b, c))
            CHECK(int_congruent(a, c));
      }
    }
  }
}

TEST_CASE("shifts compose and stay congruent") {
  std::mt19937_64 rng(999);
  std::uniform_int_distribution<long long> k_dist(-10, 10);
  for (int trial = 0; trial < 200; ++trial) {
    const ScalarValue a = testutil::random_scalar(rng);
    const long long j = k_dist(rng), k = k_dist(rng);
    CHECK(shift(shift(a, j), k) == shift(a, j + k));
    CHECK(int_congruent(a, shift(a, k)));
  }
}

TEST_CASE("incomparable labels are never congruent") {
  const ScalarValue a("a", Rational(1));
  const ScalarValue b("b", Rational(1));
  CHECK_FALSE(int_congruent(a, b));
  CHECK_FALSE(comparable(a, b));
  CHECK(comparable(a, ScalarValue("a", Rational(7))));
}
