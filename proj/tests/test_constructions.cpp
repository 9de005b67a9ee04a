#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "naive_ref.hpp"
#include "sidonkit/constructions.hpp"
#include "sidonkit/kset.hpp"
#include "sidonkit/verifier.hpp"

using namespace sidonkit;

TEST_CASE("construct_k2 small cases") {
  const Family f4 = construct_k2(4);
  CHECK(f4.sets() == std::vector<std::vector<Elem>>{
                         {1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}});
  const Family f3 = construct_k2(3);
  CHECK(f3.sets() ==
        std::vector<std::vector<Elem>>{{1, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(construct_k2(2), std::invalid_argument);

  const Family f10 = construct_k2(10);
  CHECK(f10.size() == 17);
  CHECK(is_sidon(f10));
}

TEST_CASE("construct_k2 attains the upper bound exactly") {
  for (Elem n = 3; n <= 40; ++n) {
    const Family f = construct_k2(n);
    CHECK(f.size() == static_cast<std::size_t>(2 * n - 3));
    CHECK(f.size() == upper_bound_fk(n, 2));
    CHECK(is_sidon(f));
  }
}

TEST_CASE("construct_k3 exclusion list at n = 8") {
  const Family f = construct_k3(8);
  // Excluded (before the +1 shift): dilations of {0,1,2} and {0,1,3} that
  // fit in {0..7}.
  for (const auto& excluded :
       std::vector<std::vector<Elem>>{{0, 1, 2}, {0, 2, 4}, {0, 3, 6},
                                      {0, 1, 3}, {0, 2, 6}}) {
    std::vector<Elem> shifted;
    for (Elem v : excluded) {
      shifted.push_back(v + 1);
    }
    CHECK_FALSE(f.contains(shifted));
  }
  CHECK(f.contains({1, 2, 6}));  // {0,1,5} survives
  CHECK(is_sidon(f));
}

TEST_CASE("construct_k3 size bound") {
  CHECK_THROWS_AS(construct_k3(4), std::invalid_argument);
  for (Elem n = 5; n <= 25; ++n) {
    const Family f = construct_k3(n);
    const std::uint64_t baseline =
        binomial_checked(static_cast<std::uint64_t>(n - 1), 2);
    const std::uint64_t slack = static_cast<std::uint64_t>((5 * n + 5) / 6);
    CHECK(f.size() + slack >= baseline);
    CHECK(is_sidon(f));
    CHECK(f.size() <= upper_bound_fk(n, 3));
  }
  CHECK(construct_k3(5).size() >= 2);
}

TEST_CASE("erdos_turan_sidon bases") {
  const SidonBase b3 = erdos_turan_sidon(3);
  CHECK(b3.elements == std::vector<Elem>{0, 7, 13});
  CHECK(b3.prime_p == 3);
  const SidonBase b2 = erdos_turan_sidon(2);
  CHECK(b2.elements == std::vector<Elem>{0, 5});
  CHECK_THROWS_AS(erdos_turan_sidon(1), std::invalid_argument);
  for (int k = 2; k <= 20; ++k) {
    const SidonBase base = erdos_turan_sidon(k);
    CHECK(base.elements.size() == static_cast<std::size_t>(k));
    CHECK(base.elements.front() == 0);
    CHECK(naive::is_sidon_set(base.elements));
  }
}

TEST_CASE("minimal_sidon_base table") {
  for (int k = 1; k <= 8; ++k) {
    const SidonBase base = minimal_sidon_base(k);
    CHECK(base.elements.size() == static_cast<std::size_t>(k));
    CHECK(naive::is_sidon_set(base.elements));
    if (k >= 2) {
      CHECK(base.elements.back() <= erdos_turan_sidon(k).elements.back());
    }
  }
  CHECK_THROWS_AS(minimal_sidon_base(9), std::invalid_argument);
}

TEST_CASE("construct_k4 at k = 3, n = 56 with the {0,7,13} base") {
  const K4Construction c =
      construct_k4_detailed(56, 3, SidonBase{{0, 7, 13}, 3});
  CHECK(c.family.size() == 4);
  CHECK(is_sidon(c.family));
  REQUIRE(c.intervals.size() == 3);
  CHECK(c.intervals[1].lower == 28);
  CHECK(c.intervals[1].upper == 30);
  CHECK(c.intervals[2].lower == 52);
  CHECK(c.intervals[2].upper == 54);
  for (const auto& spec : c.intervals) {
    CHECK(spec.size() >= 1);
  }

  // Interval sums pairwise disjoint over unordered index pairs.
  std::vector<std::pair<Elem, Elem>> ranges;
  for (std::size_t i = 0; i < c.intervals.size(); ++i) {
    for (std::size_t j = i; j < c.intervals.size(); ++j) {
      ranges.emplace_back(c.intervals[i].lower + c.intervals[j].lower,
                          c.intervals[i].upper + c.intervals[j].upper - 2);
    }
  }
  for (std::size_t x = 0; x < ranges.size(); ++x) {
    for (std::size_t y = x + 1; y < ranges.size(); ++y) {
      const bool disjoint = ranges[x].second < ranges[y].first ||
                            ranges[y].second < ranges[x].first;
      CHECK(disjoint);
    }
  }
}

TEST_CASE("construct_k4 validation") {
  CHECK_THROWS_AS(construct_k4(10, 2), std::invalid_argument);
  CHECK_THROWS_AS(construct_k4(20, 3, SidonBase{{0, 7, 13}, 3}),
                  std::invalid_argument);  // n < 2 * 14
  CHECK_THROWS_AS(construct_k4(100, 3, SidonBase{{0, 2, 4}, 0}),
                  std::invalid_argument);  // not Sidon
}

TEST_CASE("construct_k4 default base sizes and Sidon property") {
  for (int k = 3; k <= 5; ++k) {
    const SidonBase base = erdos_turan_sidon(k);
    const Elem d = base.elements.back() + 1;
    const Elem n = 4 * d;
    const K4Construction c = construct_k4_detailed(n, k);
    const auto expected =
        static_cast<std::uint64_t>(std::pow(n / (2 * d), k - 1));
    CHECK(c.family.size() >= expected);
    CHECK(is_sidon(c.family));
    CHECK(c.family.size() <= upper_bound_fk(n, k));
  }
}

TEST_CASE("decode_k4_sumset recovers every pair exactly") {
  const K4Construction c =
      construct_k4_detailed(56, 3, SidonBase{{0, 7, 13}, 3});
  for (std::size_t i = 0; i < c.family.size(); ++i) {
    for (std::size_t j = i; j < c.family.size(); ++j) {
      const SumsetKey key = sumset_sorted(c.family.set(i), c.family.set(j));
      const auto [u, v] = decode_k4_sumset(c, key);
      CHECK(u == c.family.set(i));
      CHECK(v == c.family.set(j));
    }
  }

  const K4Construction c4 = construct_k4_detailed(140, 4);
  std::mt19937_64 rng(17);
  for (int round = 0; round < 300; ++round) {
    const std::size_t i = rng() % c4.family.size();
    const std::size_t j = rng() % c4.family.size();
    const auto a = std::min(i, j);
    const auto b = std::max(i, j);
    const SumsetKey key = sumset_sorted(c4.family.set(a), c4.family.set(b));
    const auto [u, v] = decode_k4_sumset(c4, key);
    CHECK(u == c4.family.set(a));
    CHECK(v == c4.family.set(b));
  }

  CHECK_THROWS_AS(decode_k4_sumset(c, SumsetKey{2, 3, 4}),
                  std::invalid_argument);
}

TEST_CASE("base_b2g_set examples") {
  CHECK(base_b2g_set(18, 1) == std::vector<Elem>{1, 8, 14});
  for (const auto& [m, g_half] : std::vector<std::pair<Elem, int>>{
           {18, 1}, {30, 2}, {60, 2}, {100, 3}, {200, 4}}) {
    const auto set = base_b2g_set(m, g_half);
    REQUIRE(!set.empty());
    CHECK(set.front() >= 1);
    CHECK(set.back() <= m);
    CHECK(naive::max_pair_representation(set) <=
          static_cast<std::uint64_t>(g_half));
    // Documented density constant: |A| >= sqrt(g_half * m) / 3.
    CHECK(static_cast<double>(set.size()) >=
          std::sqrt(static_cast<double>(g_half) * static_cast<double>(m)) /
              3.0);
  }
  CHECK_THROWS_AS(base_b2g_set(1, 1), std::invalid_argument);
}

TEST_CASE("construct_b2g satisfies its bound and multiplies sizes") {
  const B2gConstruction c = construct_b2g_detailed(40, 2, 2);
  CHECK(c.family.size() == c.base_set.size() * c.inner_system.size());
  CHECK(c.family.size() >= 1);
  CHECK(is_bhg(c.family, 2, 2));
  CHECK_FALSE(is_sidon(c.family));  // g = 2 is genuinely weaker than Sidon

  CHECK_THROWS_AS(construct_b2g(40, 2, 1), std::invalid_argument);
}

TEST_CASE("construct_b2g saturates the bound at g = 4") {
  const B2gConstruction c = construct_b2g_detailed(60, 2, 4);
  CHECK(is_bhg(c.family, 2, 4));
  const auto [max_count, witness] = max_representation(c.family, 2);
  CHECK(max_count == 4);
  CHECK(representation_count(c.family, witness, 2) == 4);
}
