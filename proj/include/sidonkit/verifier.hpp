#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sidonkit/family.hpp"
#include "sidonkit/types.hpp"

namespace sidonkit {

// One sumset equality between two distinct unordered pairs of family sets.
// Canonical form: left1 <= left2, right1 <= right2 in lexicographic order,
// and (left1, left2) strictly precedes (right1, right2) as a tuple. ell is
// the number of distinct sets among the four.
struct CollisionRecord {
  std::vector<Elem> left1, left2;
  std::vector<Elem> right1, right2;
  SumsetKey key;
  int ell = 0;

  friend bool operator==(const CollisionRecord& a,
                         const CollisionRecord& b) = default;
  friend bool operator<(const CollisionRecord& a, const CollisionRecord& b) {
    return std::tie(a.key, a.left1, a.left2, a.right1, a.right2) <
           std::tie(b.key, b.left1, b.left2, b.right1, b.right2);
  }
};

// {"left":[[...],[...]],"right":[[...],[...]],"key":[...],"ell":3}
std::string to_json_line(const CollisionRecord& record);

struct CollisionCounts {
  std::uint64_t total = 0;
  std::uint64_t by_ell[5] = {0, 0, 0, 0, 0};  // indices 2..4 used
};

struct VerifierOptions {
  // Pair-enumeration cap for the general (sumset-map) route. k = 2 families
  // switch to the translate-class route instead of hitting the cap.
  std::uint64_t pair_cap = std::uint64_t{1} << 23;
  // Cap on the number of non-decreasing h-tuples visited by B_h[g] checks.
  std::uint64_t tuple_cap = std::uint64_t{1} << 30;
};

// True iff all unordered-pair sumsets A_i + A_j (i <= j) are pairwise
// distinct. Short-circuits on the first duplicate.
bool is_sidon(const Family& f, const VerifierOptions& opts = {});

// All canonical collision records, sorted by (key, left pair, right pair).
// Empty exactly when is_sidon holds.
std::vector<CollisionRecord> find_collisions(const Family& f,
                                             const VerifierOptions& opts = {});

// Record counts only (ell-resolved), without materializing records.
CollisionCounts count_collisions(const Family& f,
                                 const VerifierOptions& opts = {});

// Number of distinct multisets {A_1,...,A_h} from f whose h-fold sumset
// equals c. h >= 2.
std::uint64_t representation_count(const Family& f, const SumsetKey& c, int h,
                                   const VerifierOptions& opts = {});

// True iff every achievable h-fold sumset has at most g multiset
// representations. A Sidon system is exactly is_bhg(f, 2, 1).
bool is_bhg(const Family& f, int h, int g, const VerifierOptions& opts = {});

// Largest representation count over all achievable h-fold sumsets, with one
// witnessing sumset. Used to probe saturation of constructions.
std::pair<std::uint64_t, SumsetKey> max_representation(
    const Family& f, int h, const VerifierOptions& opts = {});

// Number of unordered pairs of distinct h-multisets sharing a sumset, i.e.
// sum over keys of C(representations, 2). For h = 2 this equals the
// canonical collision-record count.
std::uint64_t count_hfold_collision_pairs(const Family& f, int h,
                                          const VerifierOptions& opts = {});

// C(n-1, k-1) + n - k, the Sidon-system size bound. Requires 2 <= k < n.
std::uint64_t upper_bound_fk(Elem n, int k);

// Decomposition of a family over [N] into translate classes: every member
// set is min + ({0} union pattern) for a (k-1)-subset pattern of [N-1]; the
// class of a pattern is the sorted list of minima realizing it.
struct TranslateClasses {
  std::map<std::vector<Elem>, std::vector<Elem>> classes;

  std::size_t total_size() const;
  // For a Sidon family the positive difference sets of distinct classes must
  // be pairwise disjoint; returns false iff two distinct patterns share a
  // positive difference.
  bool positive_difference_sets_disjoint() const;
};

TranslateClasses translate_classes(const Family& f);

}  // namespace sidonkit
