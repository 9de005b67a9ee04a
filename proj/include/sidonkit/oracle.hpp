#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sidonkit/family.hpp"
#include "sidonkit/types.hpp"
#include "sidonkit/verifier.hpp"

namespace sidonkit {

struct ExactResult {
  Elem n = 0;
  int k = 0;
  std::uint64_t value = 0;
  std::optional<Family> witness;
  std::uint64_t nodes_explored = 0;
  double elapsed_seconds = 0.0;
};

// Exact F_k(n): the largest Sidon system inside ([n] choose k), found by
// depth-first inclusion/exclusion over candidates in lexicographic order
// with an incremental sumset map and a size-based prune. Desk scale only:
// requires C(n, k) <= 40.
ExactResult exact_fk(Elem n, int k);

// One of the ten primitive sumset equalities among zero-anchored 3-sets.
// sumset(X, Y) = sumset(V, W) = base_sumset with {X, Y} != {V, W}, and the
// gcd of all nonzero elements across the quadruple is 1.
struct EqualityFamily {
  int id = 0;
  std::array<std::vector<Elem>, 4> quadruple;  // X, Y, V, W
  SumsetKey base_sumset;
};

const std::vector<EqualityFamily>& equality_families();

// All canonical collision records among ([n] choose 3)_0, the zero-anchored
// 3-subsets of {0..n}. n <= 60.
std::vector<CollisionRecord> enumerate_3set_equalities(Elem n);

struct Classification {
  // family id -> (dilation factor, record), in input order per id.
  std::map<int, std::vector<std::pair<Elem, CollisionRecord>>> by_family;
  std::vector<CollisionRecord> unclassified;
};

// Matches each record, after dividing out the gcd of its elements, against
// the dilation families. Families sharing a base sumset (ids 6 and 7) form
// one equality clique; a record whose two pairs come from different members
// of a clique is assigned the smaller id.
Classification classify_3set_equalities(std::span<const CollisionRecord> records);

// Exact |C(ell)| counts over the complete system ([n] choose k), under the
// canonical record convention; index by ell in {2, 3, 4}.
std::array<std::uint64_t, 3> count_c_ell_all(Elem n, int k);
std::uint64_t count_c_ell(Elem n, int k, int ell);

// Exact |C'|: ell = 4 records whose pairs share distance sets componentwise
// (A1' = B1', A2' = B2', A1' != A2').
std::uint64_t count_c_prime(Elem n, int k);

// The composite-k demonstration: four 2-sets {0, x} whose 4-fold sumset S
// has all 16 subset sums distinct admit exactly three pairings into two
// 4-sets with equal pairwise sumset S.
struct MultiRepDemo {
  SumsetKey s;
  std::array<std::pair<std::vector<Elem>, std::vector<Elem>>, 3> pairings;
  Family six_sets;
};

MultiRepDemo composite_multirep(const std::array<Elem, 4>& parts);

}  // namespace sidonkit
