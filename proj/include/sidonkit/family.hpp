#pragma once

#include <cstddef>
#include <vector>

#include "sidonkit/kset.hpp"
#include "sidonkit/types.hpp"

namespace sidonkit {

// A uniform system of distinct k-subsets of [N] = {1..N}, or of {0..N} when
// zero_anchored. Sets are kept in canonical lexicographic order so that pair
// enumeration (and hence collision reports) is deterministic.
class Family {
 public:
  // Validates uniform k, distinct sets, ambient membership; each set is
  // sorted and the family is sorted lexicographically.
  Family(std::vector<std::vector<Elem>> sets, Elem n, int k,
         bool zero_anchored);

  static Family empty(Elem n, int k, bool zero_anchored);

  const std::vector<std::vector<Elem>>& sets() const noexcept { return sets_; }
  const std::vector<Elem>& set(std::size_t i) const noexcept {
    return sets_[i];
  }
  Elem n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  bool zero_anchored() const noexcept { return zero_anchored_; }
  std::size_t size() const noexcept { return sets_.size(); }
  bool contains(const std::vector<Elem>& set) const noexcept;

  KSet at(std::size_t i) const { return KSet(sets_[i], n_); }

  // Same family with every set shifted by t (ambient shifted along).
  Family translated(Elem t) const;
  // Same family with every set scaled by lambda (ambient scaled along).
  Family dilated(Elem lambda) const;

  friend bool operator==(const Family& a, const Family& b) noexcept {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.sets_ == b.sets_;
  }

 private:
  Family() = default;
  std::vector<std::vector<Elem>> sets_;
  Elem n_ = 0;
  int k_ = 0;
  bool zero_anchored_ = false;
};

}  // namespace sidonkit
