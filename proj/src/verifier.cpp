#include "sidonkit/verifier.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "sidonkit/kset.hpp"

namespace sidonkit {

namespace {

struct PairRef {
  std::uint32_t i, j;
};

std::uint64_t pair_count_of(const Family& f) {
  const std::uint64_t m = f.size();
  return m * (m + 1) / 2;
}

int distinct_of_four(const std::vector<Elem>* a, const std::vector<Elem>* b,
                     const std::vector<Elem>* c, const std::vector<Elem>* d) {
  std::array<const std::vector<Elem>*, 4> sets{a, b, c, d};
  int distinct = 0;
  for (int x = 0; x < 4; ++x) {
    bool seen = false;
    for (int y = 0; y < x && !seen; ++y) {
      seen = *sets[x] == *sets[y];
    }
    if (!seen) {
      ++distinct;
    }
  }
  return distinct;
}

// Builds the canonical record from two unordered pairs known to share `key`.
CollisionRecord make_record(std::vector<Elem> a1, std::vector<Elem> a2,
                            std::vector<Elem> b1, std::vector<Elem> b2,
                            SumsetKey key) {
  if (a2 < a1) {
    std::swap(a1, a2);
  }
  if (b2 < b1) {
    std::swap(b1, b2);
  }
  if (std::tie(b1, b2) < std::tie(a1, a2)) {
    std::swap(a1, b1);
    std::swap(a2, b2);
  }
  CollisionRecord rec;
  rec.ell = distinct_of_four(&a1, &a2, &b1, &b2);
  rec.left1 = std::move(a1);
  rec.left2 = std::move(a2);
  rec.right1 = std::move(b1);
  rec.right2 = std::move(b2);
  rec.key = std::move(key);
  return rec;
}

// ---------------------------------------------------------------------------
// General route: hash every unordered pair sumset by fingerprint, resolve
// fingerprint hits by comparing full keys. Memory is one map entry per pair,
// so this route is capped; k = 2 families fall back to the translate-class
// route below, which needs no per-pair state.
// ---------------------------------------------------------------------------

template <typename OnDuplicate>
bool scan_pairs_general(const Family& f, OnDuplicate&& on_duplicate) {
  const std::uint32_t m = static_cast<std::uint32_t>(f.size());
  SumsetEngine engine;
  SumsetKey key;
  SumsetKey other;
  std::unordered_map<std::uint64_t, PairRef> first;
  first.reserve(pair_count_of(f) * 2);
  std::vector<std::pair<std::uint64_t, PairRef>> overflow;

  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = i; j < m; ++j) {
      engine.compute(f.set(i), f.set(j), key);
      const std::uint64_t fp = fingerprint64(key);
      auto [it, inserted] = first.emplace(fp, PairRef{i, j});
      if (inserted) {
        continue;
      }
      engine.compute(f.set(it->second.i), f.set(it->second.j), other);
      if (other == key) {
        if (!on_duplicate(it->second, PairRef{i, j}, key)) {
          return false;
        }
        continue;
      }
      // Genuine fingerprint collision between different keys.
      bool matched = false;
      for (const auto& [ofp, ref] : overflow) {
        if (ofp != fp) {
          continue;
        }
        engine.compute(f.set(ref.i), f.set(ref.j), other);
        if (other == key) {
          matched = true;
          if (!on_duplicate(ref, PairRef{i, j}, key)) {
            return false;
          }
          break;
        }
      }
      if (!matched) {
        overflow.emplace_back(fp, PairRef{i, j});
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// k = 2 translate-class route.
//
// Write each 2-set as lo + {0, d}. Sumsets of distance sets {0,d1} + {0,d2}
// are equal only for equal multisets {d1, d2}, so a collision is exactly a
// repeated positive difference of minima: x + y = x' + y' with x - x' =
// y' - y. Scanning every within-pattern minima difference once therefore
// finds all collisions in O(sum of C(|class|, 2)) time and O(1)-per-pattern
// memory, which is what lets verify run on families with 10^8+ pairs.
// ---------------------------------------------------------------------------

struct DiffEntry {
  Elem d;        // pattern (distance) of the class
  Elem lo_small; // smaller minimum x'
  Elem lo_big;   // larger minimum x = x' + delta
};

template <typename OnPair>
bool scan_k2_differences(const Family& f, bool collect_all,
                         OnPair&& on_pair) {
  std::unordered_map<Elem, std::vector<Elem>> minima_of;
  for (const auto& s : f.sets()) {
    minima_of[s[1] - s[0]].push_back(s[0]);
  }
  std::unordered_map<Elem, DiffEntry> seen;
  std::unordered_map<Elem, std::vector<DiffEntry>> dup_groups;
  for (auto& [d, minima] : minima_of) {
    std::sort(minima.begin(), minima.end());
    for (std::size_t i = 0; i + 1 < minima.size(); ++i) {
      for (std::size_t j = i + 1; j < minima.size(); ++j) {
        const Elem delta = minima[j] - minima[i];
        const DiffEntry entry{d, minima[i], minima[j]};
        auto [it, inserted] = seen.emplace(delta, entry);
        if (!inserted) {
          if (!collect_all) {
            return false;
          }
          auto& group = dup_groups[delta];
          if (group.empty()) {
            group.push_back(it->second);
          }
          group.push_back(entry);
        }
      }
    }
  }
  if (!collect_all) {
    return true;
  }
  bool clean = true;
  for (auto& [delta, group] : dup_groups) {
    (void)delta;
    clean = false;
    for (std::size_t a = 0; a < group.size(); ++a) {
      for (std::size_t b = a + 1; b < group.size(); ++b) {
        on_pair(group[a], group[b]);
      }
    }
  }
  return clean;
}

// Collision induced by two difference entries sharing delta:
// (x' + P1) + (y + P2) = (x + P1) + (y' + P2).
CollisionRecord record_from_entries(const DiffEntry& e1, const DiffEntry& e2) {
  std::vector<Elem> a1{e1.lo_small, e1.lo_small + e1.d};
  std::vector<Elem> a2{e2.lo_big, e2.lo_big + e2.d};
  std::vector<Elem> b1{e1.lo_big, e1.lo_big + e1.d};
  std::vector<Elem> b2{e2.lo_small, e2.lo_small + e2.d};
  SumsetKey key = sumset_sorted(a1, a2);
  return make_record(std::move(a1), std::move(a2), std::move(b1),
                     std::move(b2), std::move(key));
}

}  // namespace

std::string to_json_line(const CollisionRecord& record) {
  std::ostringstream out;
  auto emit_set = [&out](const std::vector<Elem>& s) {
    out << '[';
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i > 0) {
        out << ',';
      }
      out << s[i];
    }
    out << ']';
  };
  out << "{\"left\":[";
  emit_set(record.left1);
  out << ',';
  emit_set(record.left2);
  out << "],\"right\":[";
  emit_set(record.right1);
  out << ',';
  emit_set(record.right2);
  out << "],\"key\":";
  emit_set(record.key);
  out << ",\"ell\":" << record.ell << '}';
  return out.str();
}

bool is_sidon(const Family& f, const VerifierOptions& opts) {
  if (f.size() <= 1) {
    return true;
  }
  if (f.k() == 2) {
    return scan_k2_differences(f, /*collect_all=*/false,
                               [](const DiffEntry&, const DiffEntry&) {});
  }
  if (pair_count_of(f) > opts.pair_cap) {
    throw CapExceeded(
        "is_sidon: pair enumeration cap exceeded for k >= 3 (raise the cap "
        "or verify a smaller family)");
  }
  return scan_pairs_general(
      f, [](const PairRef&, const PairRef&, const SumsetKey&) {
        return false;  // stop at the first duplicate
      });
}

std::vector<CollisionRecord> find_collisions(const Family& f,
                                             const VerifierOptions& opts) {
  std::vector<CollisionRecord> records;
  if (f.size() <= 1) {
    return records;
  }

  if (pair_count_of(f) <= opts.pair_cap) {
    const std::uint32_t m = static_cast<std::uint32_t>(f.size());
    SumsetEngine engine;
    SumsetKey key;
    std::unordered_map<std::uint64_t, std::uint32_t> counts;
    counts.reserve(pair_count_of(f) * 2);
    for (std::uint32_t i = 0; i < m; ++i) {
      for (std::uint32_t j = i; j < m; ++j) {
        engine.compute(f.set(i), f.set(j), key);
        ++counts[fingerprint64(key)];
      }
    }
    std::unordered_map<std::uint64_t,
                       std::vector<std::pair<SumsetKey, PairRef>>>
        groups;
    for (std::uint32_t i = 0; i < m; ++i) {
      for (std::uint32_t j = i; j < m; ++j) {
        engine.compute(f.set(i), f.set(j), key);
        const std::uint64_t fp = fingerprint64(key);
        if (counts.find(fp)->second >= 2) {
          groups[fp].emplace_back(key, PairRef{i, j});
        }
      }
    }
    for (auto& [fp, entries] : groups) {
      (void)fp;
      std::stable_sort(
          entries.begin(), entries.end(),
          [](const auto& a, const auto& b) { return a.first < b.first; });
      std::size_t begin = 0;
      while (begin < entries.size()) {
        std::size_t end = begin + 1;
        while (end < entries.size() &&
               entries[end].first == entries[begin].first) {
          ++end;
        }
        for (std::size_t a = begin; a < end; ++a) {
          for (std::size_t b = a + 1; b < end; ++b) {
            const PairRef pa = entries[a].second;
            const PairRef pb = entries[b].second;
            records.push_back(make_record(f.set(pa.i), f.set(pa.j),
                                          f.set(pb.i), f.set(pb.j),
                                          entries[a].first));
          }
        }
        begin = end;
      }
    }
  } else if (f.k() == 2) {
    scan_k2_differences(f, /*collect_all=*/true,
                        [&records](const DiffEntry& e1, const DiffEntry& e2) {
                          records.push_back(record_from_entries(e1, e2));
                        });
  } else {
    throw CapExceeded("find_collisions: pair enumeration cap exceeded");
  }

  std::sort(records.begin(), records.end());
  // The difference scan reaches a within-class collision once per matching
  // of its two minima pairs, which can be twice; keep one copy.
  records.erase(std::unique(records.begin(), records.end()), records.end());
  return records;
}

CollisionCounts count_collisions(const Family& f,
                                 const VerifierOptions& opts) {
  CollisionCounts counts;
  if (f.size() <= 1) {
    return counts;
  }
  for (const CollisionRecord& rec : find_collisions(f, opts)) {
    ++counts.total;
    ++counts.by_ell[rec.ell];
  }
  return counts;
}

// ---------------------------------------------------------------------------
// h-fold representation machinery.
// ---------------------------------------------------------------------------

namespace {

struct FoldScan {
  const Family& f;
  int h;
  std::uint64_t tuple_cap;
  SumsetEngine engine;
  std::vector<SumsetKey> partial;  // partial[t] = fold of the first t+1 picks

  explicit FoldScan(const Family& fam, int fold, std::uint64_t cap)
      : f(fam), h(fold), tuple_cap(cap) {
    if (fold < 2) {
      throw std::invalid_argument("h-fold check requires h >= 2");
    }
    partial.resize(static_cast<std::size_t>(fold));
    std::uint64_t tuples = 0;
    try {
      tuples = binomial_checked(f.size() + static_cast<std::uint64_t>(fold) - 1,
                                static_cast<std::uint64_t>(fold));
    } catch (const std::overflow_error&) {
      throw CapExceeded("h-fold enumeration: tuple cap exceeded");
    }
    if (tuples > tuple_cap) {
      throw CapExceeded("h-fold enumeration: tuple cap exceeded");
    }
  }

  // Visits every non-decreasing index tuple; leaf(key, tuple) per multiset
  // returns false to abort the scan.
  template <typename Leaf>
  void run(Leaf&& leaf) {
    if (f.size() == 0) {
      return;
    }
    std::vector<std::uint32_t> tuple(static_cast<std::size_t>(h));
    descend(0, 0, tuple, leaf);
  }

  template <typename Leaf>
  bool descend(int level, std::uint32_t start,
               std::vector<std::uint32_t>& tuple, Leaf&& leaf) {
    const std::uint32_t m = static_cast<std::uint32_t>(f.size());
    for (std::uint32_t idx = start; idx < m; ++idx) {
      if (level == 0) {
        partial[0].assign(f.set(idx).begin(), f.set(idx).end());
      } else {
        engine.compute(partial[static_cast<std::size_t>(level - 1)],
                       f.set(idx), partial[static_cast<std::size_t>(level)]);
      }
      tuple[static_cast<std::size_t>(level)] = idx;
      if (level + 1 == h) {
        if (!leaf(partial[static_cast<std::size_t>(level)], tuple)) {
          return false;
        }
      } else if (!descend(level + 1, idx, tuple, leaf)) {
        return false;
      }
    }
    return true;
  }
};

}  // namespace

std::uint64_t representation_count(const Family& f, const SumsetKey& c, int h,
                                   const VerifierOptions& opts) {
  FoldScan scan(f, h, opts.tuple_cap);
  std::uint64_t count = 0;
  scan.run([&](const SumsetKey& key, const std::vector<std::uint32_t>&) {
    if (key == c) {
      ++count;
    }
    return true;
  });
  return count;
}

namespace {

struct BhgOutcome {
  bool within_bound = true;
  std::uint64_t max_count = 0;
  SumsetKey witness;
};

// Full scan of all h-fold multisets with per-key counting. When g > 0 the
// scan aborts as soon as some key collects g+1 representations.
BhgOutcome bhg_scan(const Family& f, int h, std::uint64_t g,
                    const VerifierOptions& opts) {
  BhgOutcome outcome;
  FoldScan scan(f, h, opts.tuple_cap);

  struct Entry {
    std::vector<std::uint32_t> tuple;  // witness tuple for full-key compare
    std::uint64_t count;
  };
  std::unordered_map<std::uint64_t, std::vector<Entry>> table;
  SumsetEngine engine;
  SumsetKey other;

  scan.run([&](const SumsetKey& key, const std::vector<std::uint32_t>& t) {
    const std::uint64_t fp = fingerprint64(key);
    auto& entries = table[fp];
    Entry* hit = nullptr;
    for (auto& e : entries) {
      // Recompute the stored witness's key to rule out fp collisions.
      SumsetKey acc(f.set(e.tuple[0]).begin(), f.set(e.tuple[0]).end());
      for (std::size_t level = 1; level < e.tuple.size(); ++level) {
        engine.compute(acc, f.set(e.tuple[level]), other);
        acc.swap(other);
      }
      if (acc == key) {
        hit = &e;
        break;
      }
    }
    if (hit == nullptr) {
      entries.push_back(Entry{t, 1});
      hit = &entries.back();
    } else {
      ++hit->count;
    }
    if (hit->count > outcome.max_count) {
      outcome.max_count = hit->count;
      outcome.witness = key;
    }
    if (g > 0 && hit->count > g) {
      outcome.within_bound = false;
      return false;
    }
    return true;
  });
  return outcome;
}

}  // namespace

bool is_bhg(const Family& f, int h, int g, const VerifierOptions& opts) {
  if (g < 1) {
    throw std::invalid_argument("is_bhg: g must be >= 1");
  }
  if (f.size() == 0) {
    return true;
  }
  return bhg_scan(f, h, static_cast<std::uint64_t>(g), opts).within_bound;
}

std::pair<std::uint64_t, SumsetKey> max_representation(
    const Family& f, int h, const VerifierOptions& opts) {
  if (f.size() == 0) {
    return {0, {}};
  }
  const BhgOutcome outcome = bhg_scan(f, h, 0, opts);
  return {outcome.max_count, outcome.witness};
}

std::uint64_t count_hfold_collision_pairs(const Family& f, int h,
                                          const VerifierOptions& opts) {
  if (f.size() == 0) {
    return 0;
  }
  FoldScan scan(f, h, opts.tuple_cap);
  struct Entry {
    std::vector<std::uint32_t> tuple;
    std::uint64_t count;
  };
  std::unordered_map<std::uint64_t, std::vector<Entry>> table;
  SumsetEngine engine;
  SumsetKey other;
  std::uint64_t pairs = 0;

  scan.run([&](const SumsetKey& key, const std::vector<std::uint32_t>& t) {
    auto& entries = table[fingerprint64(key)];
    for (auto& e : entries) {
      SumsetKey acc(f.set(e.tuple[0]).begin(), f.set(e.tuple[0]).end());
      for (std::size_t level = 1; level < e.tuple.size(); ++level) {
        engine.compute(acc, f.set(e.tuple[level]), other);
        acc.swap(other);
      }
      if (acc == key) {
        pairs += e.count;  // the new multiset pairs with every earlier one
        ++e.count;
        return true;
      }
    }
    entries.push_back(Entry{t, 1});
    return true;
  });
  return pairs;
}

std::uint64_t upper_bound_fk(Elem n, int k) {
  if (k < 2 || static_cast<Elem>(k) >= n) {
    throw std::invalid_argument("upper_bound_fk: requires 2 <= k < n");
  }
  return binomial_checked(static_cast<std::uint64_t>(n - 1),
                          static_cast<std::uint64_t>(k - 1)) +
         static_cast<std::uint64_t>(n - k);
}

std::size_t TranslateClasses::total_size() const {
  std::size_t total = 0;
  for (const auto& [pattern, minima] : classes) {
    (void)pattern;
    total += minima.size();
  }
  return total;
}

bool TranslateClasses::positive_difference_sets_disjoint() const {
  std::unordered_map<Elem, const std::vector<Elem>*> owner;
  for (const auto& [pattern, minima] : classes) {
    // Difference SET per class: internal multiplicity does not matter here.
    std::vector<Elem> diffs;
    for (std::size_t i = 0; i + 1 < minima.size(); ++i) {
      for (std::size_t j = i + 1; j < minima.size(); ++j) {
        diffs.push_back(minima[j] - minima[i]);
      }
    }
    std::sort(diffs.begin(), diffs.end());
    diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
    for (Elem d : diffs) {
      auto [it, inserted] = owner.emplace(d, &pattern);
      if (!inserted && it->second != &pattern) {
        return false;
      }
    }
  }
  return true;
}

TranslateClasses translate_classes(const Family& f) {
  if (f.zero_anchored()) {
    throw std::invalid_argument(
        "translate_classes: family must live over [N] (minima >= 1)");
  }
  TranslateClasses result;
  for (const auto& s : f.sets()) {
    std::vector<Elem> pattern;
    pattern.reserve(s.size() - 1);
    for (std::size_t i = 1; i < s.size(); ++i) {
      pattern.push_back(s[i] - s[0]);
    }
    result.classes[pattern].push_back(s[0]);
  }
  for (auto& [pattern, minima] : result.classes) {
    (void)pattern;
    std::sort(minima.begin(), minima.end());
  }
  return result;
}

}  // namespace sidonkit
