#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hwcls/levels.hpp"
#include "hwcls/parse.hpp"
#include "test_util.hpp"

using namespace hwcls;

namespace {

WeightSet exact_set(int rank, std::vector<std::vector<long long>> parts) {
  WeightSet s;
  s.rank = rank;
  for (auto& p : parts)
    s.weights.insert(DominantWeight(rank, std::move(p)));
  return s;
}

} // namespace

TEST_CASE("weight normalization and Cartan products") {
  CHECK(DominantWeight(3, {1, 1, 1}) == DominantWeight::trivial(3));
  CHECK(DominantWeight(4, {2, 1, 1, 1}).parts() == std::vector<long long>{1});

  CHECK(cartan_mul(DominantWeight(3, {1}), DominantWeight(3, {1})) == DominantWeight(3, {2}));
  CHECK(cartan_mul(DominantWeight::trivial(3), DominantWeight(3, {2, 1})) ==
        DominantWeight(3, {2, 1}));
  CHECK(cartan_mul(DominantWeight(3, {1, 1}), DominantWeight(3, {1})) ==
        DominantWeight(3, {2, 1}));
  CHECK_THROWS_AS(cartan_mul(DominantWeight(3, {1}), DominantWeight(4, {1})), RankMismatch);
}

TEST_CASE("set products") {
  WeightSet triv;
  triv.rank = 2;
  triv.weights.insert(DominantWeight::trivial(2));
  WeightSet nat = exact_set(2, {{}, {1}});
  CHECK(set_mul(triv, nat) == nat);

  WeightSet single = exact_set(2, {{1}});
  CHECK(set_mul(single, single) == exact_set(2, {{2}}));

  const WeightSet e3 = basic_level({BasicSymbol::Kind::E, 0}, 3, 6);
  const WeightSet sq = set_mul(e3, e3);
  CHECK(sq == exact_set(3, {{}, {1}, {1, 1}, {2}, {2, 1}, {2, 2}}));

  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    auto pick = [&](int) {
      WeightSet s;
      s.rank = 3;
      std::uniform_int_distribution<int> c(1, 3);
      for (int k = c(rng); k > 0; --k) {
        std::uniform_int_distribution<long long> part(0, 3);
        long long a = part(rng), b = part(rng);
        if (a < b)
          std::swap(a, b);
        s.weights.insert(DominantWeight(3, b > 0 ? std::vector<long long>{a, b}
                                           : (a > 0 ? std::vector<long long>{a}
                                                    : std::vector<long long>{})));
      }
      return s;
    };
    const WeightSet a = pick(0), b = pick(1), c = pick(2);
    REQUIRE(set_mul(a, b) == set_mul(b, a));
    REQUIRE(set_mul(set_mul(a, b), c) == set_mul(a, set_mul(b, c)));
  }
}

TEST_CASE("basic level sets") {
  CHECK(basic_level({BasicSymbol::Kind::E, 0}, 3, 6) == exact_set(3, {{}, {1}, {1, 1}}));
  CHECK(basic_level({BasicSymbol::Kind::L, 1}, 4, 6) == exact_set(4, {{}, {1}}));
  CHECK(basic_level({BasicSymbol::Kind::L, 5}, 3, 6) == exact_set(3, {{}, {1}, {1, 1}}));
  CHECK(basic_level({BasicSymbol::Kind::R, 2}, 3, 6) == exact_set(3, {{}, {1, 1}, {1}}));

  WeightSet linf1 = basic_level({BasicSymbol::Kind::Linf, 1}, 3, 3);
  WeightSet expect = exact_set(3, {{}, {1}, {2}, {3}});
  expect.cap = 3;
  CHECK(linf1 == expect);

  // Duals of one-row partitions are rectangles with equal coordinates.
  WeightSet rinf1 = basic_level({BasicSymbol::Kind::Rinf, 1}, 3, 6);
  WeightSet rexpect = exact_set(3, {{}, {1, 1}, {2, 2}, {3, 3}});
  rexpect.cap = 6;
  CHECK(rinf1 == rexpect);
}

TEST_CASE("level sets of canonical forms") {
  WeightSet triv;
  triv.rank = 5;
  triv.weights.insert(DominantWeight::trivial(5));
  CHECK(cls_level(ClsCanonical::identity(), 5, 6) == triv);

  CHECK(cls_level(parse_cls("E^2"), 3, 6) ==
        exact_set(3, {{}, {1}, {1, 1}, {2}, {2, 1}, {2, 2}}));

  // Frozen from an enumeration run; the single R(2) factor at rank 3.
  CHECK(cls_level(parse_cls("R(2)"), 3, 6) == exact_set(3, {{}, {1}, {1, 1}}));

  CHECK_THROWS_AS(cls_level(ClsCanonical::e_infinity(), 3, 6), EInfinityNotEnumerable);
}

TEST_CASE("branching by interlacing") {
  CHECK(branch(DominantWeight::trivial(4)).weights ==
        exact_set(3, {{}}).weights);
  CHECK(branch(DominantWeight(4, {1})) == exact_set(3, {{}, {1}}));
  CHECK(branch(DominantWeight(3, {1, 1})) == exact_set(2, {{}, {1}}));
}

TEST_CASE("branching respects dimension bookkeeping") {
  for (int n = 3; n <= 5; ++n) {
    std::vector<std::vector<long long>> cur{{}};
    std::vector<std::vector<long long>> all;
    // All partitions with at most n-1 rows and at most 6 boxes.
    std::function<void(std::vector<long long>&)> rec = [&](std::vector<long long>& acc) {
      all.push_back(acc);
      if (static_cast<int>(acc.size()) == n - 1)
        return;
      long long used = 0;
      for (long long p : acc)
        used += p;
      const long long prev = acc.empty() ? 6 : acc.back();
      for (long long next = 1; next <= std::min(prev, 6 - used); ++next) {
        acc.push_back(next);
        rec(acc);
        acc.pop_back();
      }
    };
    std::vector<long long> acc;
    rec(acc);
    for (const auto& parts : all) {
      const DominantWeight lam(n, parts);
      long long total = 0;
      for (const auto& mu : branch_raw(lam))
        total += weyl_dim(DominantWeight(n - 1, mu));
      REQUIRE(total == weyl_dim(lam));
    }
  }
}

TEST_CASE("weyl dimensions of small weights") {
  CHECK(weyl_dim(DominantWeight::trivial(3)) == 1);
  CHECK(weyl_dim(DominantWeight(3, {1})) == 3);
  CHECK(weyl_dim(DominantWeight(3, {1, 1})) == 3);
  CHECK(weyl_dim(DominantWeight(3, {2})) == 6);
  CHECK(weyl_dim(DominantWeight(3, {1, 1, 1})) == 1);
  CHECK(weyl_dim(DominantWeight(4, {1})) == 4);
  CHECK(weyl_dim(DominantWeight(3, {2, 1})) == 8);
}

TEST_CASE("coherence of basic systems and products") {
  for (int n = 3; n <= 5; ++n) {
    INFO(n);
    CHECK(coherence_check(ClsCanonical::identity(), n, 6).coherent);
    CHECK(coherence_check(parse_cls("E"), n, 6).coherent);
    for (long long i = 1; i <= 3; ++i) {
      CHECK(coherence_check(parse_cls("L(" + std::to_string(i) + ")"), n, 6).coherent);
      CHECK(coherence_check(parse_cls("R(" + std::to_string(i) + ")"), n, 6).coherent);
      CHECK(coherence_check(parse_cls("Linf(" + std::to_string(i) + ")"), n, 6).coherent);
      CHECK(coherence_check(parse_cls("Rinf(" + std::to_string(i) + ")"), n, 6).coherent);
    }
  }
  CHECK(coherence_check(parse_cls("E^2"), 4, 6).coherent);

  std::mt19937_64 rng(31415);
  for (int trial = 0; trial < 100; ++trial) {
    const ClsCanonical q = testutil::random_finite_type_cls(rng, 4, 2, 2);
    INFO(to_string(q));
    REQUIRE(coherence_check(q, 4, 6).coherent);
  }
}

TEST_CASE("coherence reports carry the comparison mode and sizes") {
  const CoherenceReport exact = coherence_check(parse_cls("R(2)"), 4, 6);
  CHECK(exact.coherent);
  CHECK(exact.exact);
  CHECK(exact.high_size == 3);
  CHECK(exact.low_size == 3);
  CHECK(exact.not_in_low.empty());
  CHECK(exact.not_in_closure.empty());

  const CoherenceReport capped = coherence_check(parse_cls("Linf(1)"), 4, 6);
  CHECK(capped.coherent);
  CHECK_FALSE(capped.exact);
  CHECK(capped.soundness_degree == 6);
  CHECK(capped.high_size == 7); // one-row partitions of size at most 6
}

TEST_CASE("product absorption rules agree with level enumeration") {
  for (int n : {3, 4}) {
    for (long long v = 1; v <= 2; ++v) {
      const WeightSet linf = basic_level({BasicSymbol::Kind::Linf, v}, n, 6);
      for (long long p = 1; p <= v; ++p) {
        const WeightSet prod = set_mul(linf, basic_level({BasicSymbol::Kind::L, p}, n, 6));
        INFO("n=" << n << " v=" << v << " p=" << p);
        // Compare below the common cap: the product may exceed it.
        for (const auto& w : linf.weights)
          REQUIRE(prod.contains(w));
        for (const auto& w : prod.weights)
          if (w.size() <= 6)
            REQUIRE(linf.contains(w));
      }
      const WeightSet rinf = basic_level({BasicSymbol::Kind::Rinf, v}, n, 6);
      for (long long p = 1; p <= v; ++p) {
        const WeightSet prod = set_mul(rinf, basic_level({BasicSymbol::Kind::R, p}, n, 6));
        INFO("n=" << n << " v=" << v << " p=" << p);
        for (const auto& w : rinf.weights)
          REQUIRE(prod.contains(w));
        for (const auto& w : prod.weights)
          if (w.size() <= 6)
            REQUIRE(rinf.contains(w));
      }
    }
  }
}
