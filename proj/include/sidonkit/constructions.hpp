#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sidonkit/family.hpp"
#include "sidonkit/types.hpp"

namespace sidonkit {

// Zero-anchored Sidon set used as the skeleton of the interval construction.
// prime_p records the prime parameter when the Erdos-Turan generator built
// it, 0 when supplied externally.
struct SidonBase {
  std::vector<Elem> elements;
  Elem prime_p = 0;
};

// Half-open integer interval [lower, upper) attached to base element index.
struct IntervalSpec {
  int index = 0;
  Elem lower = 0;
  Elem upper = 0;

  Elem size() const noexcept { return upper - lower; }
};

// True iff all pairwise sums (with repetition) of a sorted set are distinct.
bool is_sidon_set(const std::vector<Elem>& sorted_elements);

// Largest number of unordered representations x = a + a' over the set.
std::uint64_t max_pair_representation(const std::vector<Elem>& elements);

// {2p*i + (i^2 mod p) : 0 <= i < k} for the smallest prime p >= k; verified
// Sidon before returning. k >= 2.
SidonBase erdos_turan_sidon(int k);

// Densest known zero-anchored Sidon set with k elements, for k <= 8. Tighter
// than the Erdos-Turan base when the constant matters.
SidonBase minimal_sidon_base(int k);

// The size-(2n-3) Sidon system {{1,1+i}} union {{n-i,n}} over [n]. n >= 3.
Family construct_k2(Elem n);

// All of ([n-1] choose 3)_0 minus the dilations of {0,1,2} and {0,1,3} that
// fit below n, shifted by 1. Sidon over [n]; n >= 5.
Family construct_k3(Elem n);

// Interval (product) construction over a Sidon base. The family is the set
// of all {0, b_1, ..., b_{k-1}} + 1 with b_i drawn from disjoint intervals
// whose pairwise interval-sums are themselves disjoint.
struct K4Construction {
  Family family;
  SidonBase base;
  std::vector<IntervalSpec> intervals;  // index 0 is the degenerate {0}
};

K4Construction construct_k4_detailed(Elem n, int k,
                                     std::optional<SidonBase> base = {});
Family construct_k4(Elem n, int k, std::optional<SidonBase> base = {});

// Recovers the unique unordered pair (U, V) of family members from their
// sumset alone. Throws if the key is not a sumset of two members.
std::pair<std::vector<Elem>, std::vector<Elem>> decode_k4_sumset(
    const K4Construction& construction, const SumsetKey& key);

// A set in [1, m] whose 2-fold representation counts are all <= g_half,
// of size on the order of sqrt(g_half * m): g_half spaced translates of a
// zero-anchored Sidon set, brute-force verified before returning.
std::vector<Elem> base_b2g_set(Elem m, int g_half);

// B_2[g] system {a + I : a in A, I in script-I}: A a B_2[g/2]-bounded set in
// [1, n/2], script-I a zero-anchored Sidon system over {0..n/2}.
struct B2gConstruction {
  Family family;
  std::vector<Elem> base_set;
  Family inner_system;
};

B2gConstruction construct_b2g_detailed(Elem n, int k, int g);
Family construct_b2g(Elem n, int k, int g);

}  // namespace sidonkit
