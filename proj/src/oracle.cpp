#include "sidonkit/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "sidonkit/kset.hpp"

namespace sidonkit {

namespace {

std::vector<std::vector<Elem>> all_k_subsets(Elem n, int k, Elem first) {
  // k-subsets of {first..n} in lexicographic order.
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> current;
  auto rec = [&](auto&& self, Elem next) -> void {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    const int missing = k - static_cast<int>(current.size());
    for (Elem v = next; v + missing - 1 <= n; ++v) {
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  rec(rec, first);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// exact_fk
// ---------------------------------------------------------------------------

namespace {

struct FkSearch {
  const std::vector<std::vector<Elem>>& candidates;
  SumsetEngine engine;
  SumsetKey key;
  std::unordered_map<std::uint64_t, std::vector<SumsetKey>> sums;
  std::vector<std::uint64_t> journal;  // fps inserted, per include, flat
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> best_choice;
  std::uint64_t nodes = 0;

  explicit FkSearch(const std::vector<std::vector<Elem>>& c) : candidates(c) {}

  // Inserts all sumsets of candidate c against the chosen sets (and itself).
  // On a duplicate sumset, rolls back and reports failure.
  bool try_include(std::size_t c) {
    const std::size_t mark = journal.size();
    chosen.push_back(c);
    for (std::size_t s : chosen) {
      engine.compute(candidates[c], candidates[s], key);
      const std::uint64_t fp = fingerprint64(key);
      auto& bucket = sums[fp];
      bool clash = false;
      for (const auto& existing : bucket) {
        if (existing == key) {
          clash = true;
          break;
        }
      }
      if (clash) {
        chosen.pop_back();
        rollback(mark);
        return false;
      }
      bucket.push_back(key);
      journal.push_back(fp);
    }
    return true;
  }

  void undo_include(std::size_t mark) {
    chosen.pop_back();
    rollback(mark);
  }

  void rollback(std::size_t mark) {
    while (journal.size() > mark) {
      auto it = sums.find(journal.back());
      it->second.pop_back();
      if (it->second.empty()) {
        sums.erase(it);
      }
      journal.pop_back();
    }
  }

  void dfs(std::size_t pos) {
    ++nodes;
    if (chosen.size() > best_choice.size()) {
      best_choice = chosen;
    }
    if (pos == candidates.size() ||
        chosen.size() + (candidates.size() - pos) <= best_choice.size()) {
      return;
    }
    const std::size_t mark = journal.size();
    if (try_include(pos)) {
      dfs(pos + 1);
      undo_include(mark);
    }
    dfs(pos + 1);
  }
};

}  // namespace

ExactResult exact_fk(Elem n, int k) {
  if (k < 1 || static_cast<Elem>(k) > n) {
    throw std::invalid_argument("exact_fk: requires 1 <= k <= n");
  }
  const std::uint64_t candidate_count =
      binomial_checked(static_cast<std::uint64_t>(n),
                       static_cast<std::uint64_t>(k));
  if (candidate_count > 40) {
    throw CapExceeded("exact_fk: C(n,k) > 40 exceeds the desk-scale cap");
  }
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::vector<Elem>> candidates = all_k_subsets(n, k, 1);
  FkSearch search(candidates);
  search.dfs(0);

  ExactResult result;
  result.n = n;
  result.k = k;
  result.value = search.best_choice.size();
  result.nodes_explored = search.nodes;
  std::vector<std::vector<Elem>> witness_sets;
  witness_sets.reserve(search.best_choice.size());
  for (std::size_t idx : search.best_choice) {
    witness_sets.push_back(candidates[idx]);
  }
  if (!witness_sets.empty()) {
    result.witness =
        Family(std::move(witness_sets), n, k, /*zero_anchored=*/false);
  }
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

// ---------------------------------------------------------------------------
// The ten primitive 3-set equalities and their classification.
// ---------------------------------------------------------------------------

const std::vector<EqualityFamily>& equality_families() {
  static const std::vector<EqualityFamily> families = [] {
    const std::vector<std::array<std::vector<Elem>, 4>> quads = {
        {{{0, 1, 2}, {0, 2, 5}, {0, 1, 2}, {0, 3, 5}}},
        {{{0, 1, 3}, {0, 1, 5}, {0, 1, 4}, {0, 2, 4}}},
        {{{0, 1, 3}, {0, 4, 6}, {0, 1, 4}, {0, 3, 5}}},
        {{{0, 2, 3}, {0, 4, 5}, {0, 2, 4}, {0, 3, 4}}},
        {{{0, 2, 3}, {0, 2, 6}, {0, 2, 5}, {0, 3, 4}}},
        {{{0, 1, 2}, {0, 1, 4}, {0, 1, 2}, {0, 2, 4}}},
        {{{0, 1, 2}, {0, 3, 4}, {0, 1, 3}, {0, 2, 3}}},
        {{{0, 1, 3}, {0, 1, 4}, {0, 1, 3}, {0, 2, 4}}},
        {{{0, 2, 3}, {0, 2, 4}, {0, 2, 3}, {0, 3, 4}}},
        {{{0, 1, 2}, {0, 1, 3}, {0, 1, 2}, {0, 2, 3}}},
    };
    std::vector<EqualityFamily> out;
    out.reserve(quads.size());
    int id = 1;
    for (const auto& q : quads) {
      EqualityFamily fam;
      fam.id = id++;
      fam.quadruple = q;
      fam.base_sumset = sumset_sorted(q[0], q[1]);
      if (fam.base_sumset != sumset_sorted(q[2], q[3])) {
        throw std::logic_error("equality_families: inconsistent table entry");
      }
      out.push_back(std::move(fam));
    }
    return out;
  }();
  return families;
}

std::vector<CollisionRecord> enumerate_3set_equalities(Elem n) {
  if (n > 60) {
    throw CapExceeded("enumerate_3set_equalities: n > 60 exceeds the cap");
  }
  if (n < 2) {
    return {};
  }
  std::vector<std::vector<Elem>> sets;
  for (Elem a = 1; a < n; ++a) {
    for (Elem b = a + 1; b <= n; ++b) {
      sets.push_back({0, a, b});
    }
  }
  const Family family(std::move(sets), n, 3, /*zero_anchored=*/true);
  return find_collisions(family);
}

namespace {

using CanonPair = std::pair<std::vector<Elem>, std::vector<Elem>>;

CanonPair canon_pair(std::vector<Elem> a, std::vector<Elem> b) {
  if (b < a) {
    a.swap(b);
  }
  return {std::move(a), std::move(b)};
}

Elem gcd_of_record(const CollisionRecord& rec) {
  Elem g = 0;
  for (const auto* set :
       {&rec.left1, &rec.left2, &rec.right1, &rec.right2}) {
    for (Elem v : *set) {
      g = std::gcd(g, v);
    }
  }
  return g == 0 ? 1 : g;
}

std::vector<Elem> divided(const std::vector<Elem>& v, Elem g) {
  std::vector<Elem> out;
  out.reserve(v.size());
  for (Elem e : v) {
    out.push_back(e / g);
  }
  return out;
}

}  // namespace

Classification classify_3set_equalities(
    std::span<const CollisionRecord> records) {
  // Pair -> owning family id, and base sumset -> participating pairs. Ids 6
  // and 7 share the sumset {0..6}; their four pairs form one clique, so a
  // record may legitimately mix pairs of both lines.
  struct PairEntry {
    CanonPair pair;
    int id;
  };
  std::unordered_map<std::uint64_t, std::vector<PairEntry>> by_key;
  for (const EqualityFamily& fam : equality_families()) {
    const std::uint64_t fp = fingerprint64(fam.base_sumset);
    auto& entries = by_key[fp];
    for (std::size_t side = 0; side < 2; ++side) {
      CanonPair p = canon_pair(fam.quadruple[2 * side],
                               fam.quadruple[2 * side + 1]);
      bool present = false;
      for (const auto& e : entries) {
        present = present || e.pair == p;
      }
      if (!present) {
        entries.push_back(PairEntry{std::move(p), fam.id});
      }
    }
  }

  Classification result;
  for (const CollisionRecord& rec : records) {
    const Elem g = gcd_of_record(rec);
    const std::vector<Elem> key = divided(rec.key, g);
    const CanonPair left =
        canon_pair(divided(rec.left1, g), divided(rec.left2, g));
    const CanonPair right =
        canon_pair(divided(rec.right1, g), divided(rec.right2, g));

    int left_id = 0;
    int right_id = 0;
    auto it = by_key.find(fingerprint64(key));
    if (it != by_key.end()) {
      for (const auto& entry : it->second) {
        if (entry.pair == left) {
          left_id = entry.id;
        }
        if (entry.pair == right) {
          right_id = entry.id;
        }
      }
    }
    if (left_id > 0 && right_id > 0) {
      result.by_family[std::min(left_id, right_id)].emplace_back(g, rec);
    } else {
      result.unclassified.push_back(rec);
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Exact C(ell) counts over the complete system.
// ---------------------------------------------------------------------------

std::array<std::uint64_t, 3> count_c_ell_all(Elem n, int k) {
  if (k < 1 || static_cast<Elem>(k) > n) {
    throw std::invalid_argument("count_c_ell: requires 1 <= k <= n");
  }
  const std::uint64_t sets = binomial_checked(static_cast<std::uint64_t>(n),
                                              static_cast<std::uint64_t>(k));
  if (sets > 5000) {
    throw CapExceeded("count_c_ell: C(n,k) > 5000 exceeds the cap");
  }
  const Family family(all_k_subsets(n, k, 1), n, k, /*zero_anchored=*/false);
  const CollisionCounts counts = count_collisions(family);
  return {counts.by_ell[2], counts.by_ell[3], counts.by_ell[4]};
}

std::uint64_t count_c_ell(Elem n, int k, int ell) {
  if (ell < 2 || ell > 4) {
    throw std::invalid_argument("count_c_ell: ell must be 2, 3 or 4");
  }
  return count_c_ell_all(n, k)[static_cast<std::size_t>(ell - 2)];
}

std::uint64_t count_c_prime(Elem n, int k) {
  if (k < 1 || static_cast<Elem>(k) > n) {
    throw std::invalid_argument("count_c_prime: requires 1 <= k <= n");
  }
  const std::uint64_t sets = binomial_checked(static_cast<std::uint64_t>(n),
                                              static_cast<std::uint64_t>(k));
  if (sets > 5000) {
    throw CapExceeded("count_c_prime: C(n,k) > 5000 exceeds the cap");
  }
  const Family family(all_k_subsets(n, k, 1), n, k, /*zero_anchored=*/false);
  auto distance_set = [](const std::vector<Elem>& s) {
    std::vector<Elem> out;
    out.reserve(s.size());
    for (Elem v : s) {
      out.push_back(v - s.front());
    }
    return out;
  };
  std::uint64_t count = 0;
  for (const CollisionRecord& rec : find_collisions(family)) {
    if (rec.ell != 4) {
      continue;
    }
    const auto a1 = distance_set(rec.left1);
    const auto a2 = distance_set(rec.left2);
    if (a1 != a2 && a1 == distance_set(rec.right1) &&
        a2 == distance_set(rec.right2)) {
      ++count;
    }
  }
  return count;
}

// ---------------------------------------------------------------------------
// Composite-k multi-representation demo.
// ---------------------------------------------------------------------------

MultiRepDemo composite_multirep(const std::array<Elem, 4>& parts) {
  for (Elem v : parts) {
    if (v < 1) {
      throw std::invalid_argument("composite_multirep: parts must be >= 1");
    }
  }
  std::vector<KSet> two_sets;
  Elem total = 0;
  for (Elem v : parts) {
    total += v;
  }
  for (Elem v : parts) {
    two_sets.emplace_back(std::vector<Elem>{0, v}, total);
  }
  SumsetKey s = h_fold_sumset(two_sets);
  if (s.size() != 16) {
    throw std::invalid_argument(
        "composite_multirep: subset sums collide, |S| < 16");
  }

  const std::array<std::array<int, 4>, 3> splits = {
      {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  std::array<std::pair<std::vector<Elem>, std::vector<Elem>>, 3> pairings;
  std::vector<std::vector<Elem>> six;
  for (std::size_t p = 0; p < splits.size(); ++p) {
    const auto& sp = splits[p];
    std::vector<Elem> u = sumset_sorted(two_sets[sp[0]].elements(),
                                        two_sets[sp[1]].elements());
    std::vector<Elem> v = sumset_sorted(two_sets[sp[2]].elements(),
                                        two_sets[sp[3]].elements());
    if (v < u) {
      u.swap(v);
    }
    six.push_back(u);
    six.push_back(v);
    pairings[p] = {std::move(u), std::move(v)};
  }
  return MultiRepDemo{std::move(s), std::move(pairings),
                      Family(std::move(six), total, 4, /*zero_anchored=*/true)};
}

}  // namespace sidonkit
