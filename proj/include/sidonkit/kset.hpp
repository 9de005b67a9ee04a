#pragma once

#include <compare>
#include <span>
#include <vector>

#include "sidonkit/kernels.hpp"
#include "sidonkit/types.hpp"

namespace sidonkit {

// A k-subset of {0, ..., ambient_n}, stored strictly ascending.
class KSet {
 public:
  // Sorts the elements; throws std::invalid_argument on duplicates, negative
  // elements, an empty set, or elements beyond the ambient.
  KSet(std::vector<Elem> elements, Elem ambient_n);

  const std::vector<Elem>& elements() const noexcept { return elements_; }
  Elem ambient() const noexcept { return ambient_n_; }
  std::size_t k() const noexcept { return elements_.size(); }
  Elem min() const noexcept { return elements_.front(); }
  Elem max() const noexcept { return elements_.back(); }
  bool contains(Elem v) const noexcept;

  friend bool operator==(const KSet& a, const KSet& b) noexcept {
    return a.elements_ == b.elements_;
  }

 private:
  std::vector<Elem> elements_;
  Elem ambient_n_;
};

// min(A) + distance set, the translation-normal form. The distance set is
// zero-anchored and reassembles the original set exactly.
struct NormalForm {
  Elem base;
  KSet distance_set;
};

SumsetKey sumset(const KSet& a, const KSet& b);

// Iterated sumset of one or more sets; throws on an empty sequence.
SumsetKey h_fold_sumset(std::span<const KSet> sets);

NormalForm normalize(const KSet& a);

// Lexicographic order: A precedes B iff min(A delta B) lies in A. Total on
// sets of equal size; throws std::invalid_argument on a size mismatch.
std::strong_ordering lex_compare(const KSet& a, const KSet& b);

// lambda * A. The caller supplies the ambient bound the dilation must fit
// in; exceeding it (or the global cap) is an overflow error.
KSet dilate(const KSet& a, Elem lambda, Elem ambient_bound);

// Dual of a zero-anchored 3-set {0, x1, x2}: x2 - X = {0, x2-x1, x2}.
// An involution. Throws unless k = 3 and 0 is a member.
KSet dual_3set(const KSet& x);

// ---------------------------------------------------------------------------
// Low-level sumset engine on raw sorted element spans.
//
// Two routes produce identical keys: direct pairwise-sum enumeration (wins
// for small k*k over wide ranges) and the bit-vector route (build one operand
// as a bitset, shift-or by each element of the other; wins once the product
// of sizes dwarfs the bit width). compute() picks per call; the forced
// variants exist so tests can assert the routes agree.
// ---------------------------------------------------------------------------
class SumsetEngine {
 public:
  void compute(std::span<const Elem> a, std::span<const Elem> b,
               SumsetKey& out);
  void compute_direct(std::span<const Elem> a, std::span<const Elem> b,
                      SumsetKey& out);
  void compute_bitset(std::span<const Elem> a, std::span<const Elem> b,
                      SumsetKey& out);

 private:
  std::vector<kern::Word> bits_;
  std::vector<kern::Word> src_;
  std::vector<Elem> tmp_;
};

// One-shot convenience over SumsetEngine.
SumsetKey sumset_sorted(std::span<const Elem> a, std::span<const Elem> b);

}  // namespace sidonkit
