#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "naive_ref.hpp"
#include "sidonkit/verifier.hpp"

using namespace sidonkit;

namespace {

Family prop41_family_n5() {
  return Family({{1, 2}, {1, 3}, {1, 4}, {1, 5}, {4, 5}, {3, 5}, {2, 5}}, 5, 2,
                false);
}

Family shifted_triple() {
  // 1 + {0,1,2}, 1 + {0,1,3}, 1 + {0,2,3}: one sumset equality.
  return Family({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}}, 4, 3, false);
}

Family full_k_system(Elem n, int k) {
  std::vector<std::vector<Elem>> sets;
  std::vector<Elem> current;
  auto rec = [&](auto&& self, Elem next) -> void {
    if (static_cast<int>(current.size()) == k) {
      sets.push_back(current);
      return;
    }
    for (Elem v = next; v <= n; ++v) {
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  rec(rec, 1);
  return Family(std::move(sets), n, k, false);
}

}  // namespace

TEST_CASE("is_sidon examples") {
  CHECK(is_sidon(prop41_family_n5()));
  CHECK(is_sidon(Family({{0, 1, 3}}, 3, 3, true)));
  CHECK_FALSE(is_sidon(shifted_triple()));
  CHECK(is_sidon(Family::empty(5, 2, false)));
}

TEST_CASE("find_collisions on the shifted triple") {
  const auto records = find_collisions(shifted_triple());
  REQUIRE(records.size() == 1);
  const CollisionRecord& rec = records.front();
  CHECK(rec.ell == 3);
  CHECK(rec.left1 == std::vector<Elem>{1, 2, 3});
  CHECK(rec.left2 == std::vector<Elem>{1, 2, 4});
  CHECK(rec.right1 == std::vector<Elem>{1, 2, 3});
  CHECK(rec.right2 == std::vector<Elem>{1, 3, 4});
  CHECK(rec.key == SumsetKey{2, 3, 4, 5, 6, 7});
  CHECK(to_json_line(rec) ==
        "{\"left\":[[1,2,3],[1,2,4]],\"right\":[[1,2,3],[1,3,4]],"
        "\"key\":[2,3,4,5,6,7],\"ell\":3}");
}

TEST_CASE("find_collisions is empty exactly on Sidon families") {
  CHECK(find_collisions(prop41_family_n5()).empty());
  const auto naive_records =
      naive::find_collisions_quadruple(full_k_system(5, 2));
  const auto records = find_collisions(full_k_system(5, 2));
  CHECK(records.size() == naive_records.size());
  CHECK(records == naive_records);
}

TEST_CASE("find_collisions matches the quadruple loop on random families") {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 60; ++round) {
    const int k = 2 + static_cast<int>(rng() % 2);
    const Elem n = 2 * k + 2 + static_cast<Elem>(rng() % 10);
    const Family f = naive::random_family(rng, n, k, 3 + rng() % 20);
    const auto ours = find_collisions(f);
    const auto reference = naive::find_collisions_quadruple(f);
    CHECK(ours == reference);
    CHECK(is_sidon(f) == ours.empty());
  }
}

TEST_CASE("k = 2 translate-class route agrees with the general route") {
  std::mt19937_64 rng(555);
  VerifierOptions force_k2;
  force_k2.pair_cap = 0;  // push every k = 2 family onto the class route
  for (int round = 0; round < 80; ++round) {
    const Elem n = 6 + static_cast<Elem>(rng() % 14);
    const Family f = naive::random_family(rng, n, 2, 3 + rng() % 25);
    CHECK(find_collisions(f, force_k2) == find_collisions(f));
  }
  // Full pair system: dense collision structure, both routes identical.
  const Family full14 = full_k_system(14, 2);
  CHECK(find_collisions(full14, force_k2) == find_collisions(full14));

  // k >= 3 past the cap is a hard error.
  const Family g = naive::random_family(rng, 12, 3, 8);
  CHECK_THROWS_AS(find_collisions(g, force_k2), CapExceeded);
  CHECK_THROWS_AS(is_sidon(g, force_k2), CapExceeded);
}

TEST_CASE("count_collisions matches record enumeration") {
  std::mt19937_64 rng(808);
  for (int round = 0; round < 40; ++round) {
    const int k = 2 + static_cast<int>(rng() % 2);
    const Elem n = 8 + static_cast<Elem>(rng() % 8);
    const Family f = naive::random_family(rng, n, k, 4 + rng() % 18);
    const auto records = find_collisions(f);
    const auto counts = count_collisions(f);
    CHECK(counts.total == records.size());
    std::uint64_t by_ell[5] = {0, 0, 0, 0, 0};
    for (const auto& rec : records) {
      ++by_ell[rec.ell];
    }
    for (int ell = 2; ell <= 4; ++ell) {
      CHECK(counts.by_ell[ell] == by_ell[ell]);
    }
  }
}

TEST_CASE("representation_count examples") {
  const Family f({{0, 1, 2}, {0, 2, 5}, {0, 3, 5}}, 5, 3, true);
  const SumsetKey c{0, 1, 2, 3, 4, 5, 6, 7};
  CHECK(representation_count(f, c, 2) == 2);
  CHECK(representation_count(f, SumsetKey{0, 1, 2}, 2) == 0);
  CHECK_THROWS_AS(representation_count(f, c, 1), std::invalid_argument);
}

TEST_CASE("representation_count matches the reference enumeration") {
  std::mt19937_64 rng(31337);
  for (int round = 0; round < 30; ++round) {
    const Elem n = 6 + static_cast<Elem>(rng() % 8);
    const Family f = naive::random_family(rng, n, 2, 3 + rng() % 6);
    const int h = 2 + static_cast<int>(rng() % 2);
    // Probe sumsets that do occur plus one that usually does not.
    std::vector<std::vector<Elem>> chosen;
    for (int i = 0; i < h; ++i) {
      chosen.push_back(f.set(rng() % f.size()));
    }
    const auto target = naive::h_fold(chosen);
    CHECK(representation_count(f, target, h) ==
          naive::representation_count(f, target, h));
    const SumsetKey absent{0, 1};
    CHECK(representation_count(f, absent, h) ==
          naive::representation_count(f, absent, h));
  }
}

TEST_CASE("is_bhg examples and equivalences") {
  CHECK(is_bhg(prop41_family_n5(), 2, 1));
  CHECK_FALSE(is_bhg(shifted_triple(), 2, 1));
  CHECK(is_bhg(shifted_triple(), 2, 2));

  std::mt19937_64 rng(606);
  for (int round = 0; round < 50; ++round) {
    const Family f = naive::random_family(rng, 6, 2, 1 + rng() % 12);
    const bool sidon = is_sidon(f);
    CHECK(sidon == find_collisions(f).empty());
    CHECK(sidon == is_bhg(f, 2, 1));
  }
}

TEST_CASE("max_representation reports the saturating sumset") {
  const auto [count, witness] = max_representation(shifted_triple(), 2);
  CHECK(count == 2);
  CHECK(witness == SumsetKey{2, 3, 4, 5, 6, 7});
}

TEST_CASE("upper_bound_fk formula") {
  CHECK(upper_bound_fk(5, 2) == 7);
  CHECK(upper_bound_fk(6, 3) == 13);
  CHECK(upper_bound_fk(10, 4) == 90);
  CHECK_THROWS_AS(upper_bound_fk(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(upper_bound_fk(5, 5), std::invalid_argument);
}

TEST_CASE("sidon families respect the upper bound") {
  std::mt19937_64 rng(909);
  for (int round = 0; round < 40; ++round) {
    const Elem n = 5 + static_cast<Elem>(rng() % 8);
    const Family f = naive::random_family(rng, n, 2, 2 + rng() % 8);
    if (is_sidon(f)) {
      CHECK(f.size() <= upper_bound_fk(n, 2));
    }
  }
}

TEST_CASE("translate classes of the size-7 construction at n = 5") {
  const auto classes = translate_classes(prop41_family_n5());
  CHECK(classes.total_size() == 7);
  CHECK(classes.classes.at({1}) == std::vector<Elem>{1, 4});
  CHECK(classes.classes.at({4}) == std::vector<Elem>{1});
  CHECK(classes.positive_difference_sets_disjoint());

  CHECK(translate_classes(Family::empty(5, 2, false)).classes.empty());
}

TEST_CASE("translate class disjointness detects the planted violation") {
  // A(P) = {1, 4} and A(Q) = {2, 5} share the positive difference 3:
  // (1+P) + (5+Q) = (4+P) + (2+Q).
  const Family f({{1, 2}, {4, 5}, {2, 4}, {5, 7}}, 7, 2, false);
  const auto classes = translate_classes(f);
  CHECK_FALSE(classes.positive_difference_sets_disjoint());
  CHECK_FALSE(is_sidon(f));
  const auto records = find_collisions(f);
  REQUIRE(records.size() == 1);
  CHECK(records.front().ell == 4);
}

TEST_CASE("translation and dilation invariance") {
  std::mt19937_64 rng(1111);
  for (int round = 0; round < 40; ++round) {
    const int k = 2 + static_cast<int>(rng() % 2);
    const Elem n = 8 + static_cast<Elem>(rng() % 8);
    const Family f = naive::random_family(rng, n, k, 3 + rng() % 12);
    const bool sidon = is_sidon(f);
    const Elem t = 1 + static_cast<Elem>(rng() % 5);
    const Elem lambda = 2 + static_cast<Elem>(rng() % 3);
    CHECK(is_sidon(f.translated(t)) == sidon);
    CHECK(is_sidon(f.dilated(lambda)) == sidon);

    // ell patterns are translation invariant.
    const auto before = find_collisions(f);
    const auto after = find_collisions(f.translated(t));
    REQUIRE(before.size() == after.size());
    for (std::size_t i = 0; i < before.size(); ++i) {
      CHECK(before[i].ell == after[i].ell);
    }
  }
}
