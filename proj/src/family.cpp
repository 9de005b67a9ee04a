#include "sidonkit/family.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sidonkit {

Family::Family(std::vector<std::vector<Elem>> sets, Elem n, int k,
               bool zero_anchored)
    : sets_(std::move(sets)), n_(n), k_(k), zero_anchored_(zero_anchored) {
  if (n_ < 1 || n_ > kMaxAmbient) {
    throw std::invalid_argument("Family: ambient N out of range");
  }
  if (k_ < 1) {
    throw std::invalid_argument("Family: k must be positive");
  }
  const Elem lo = zero_anchored_ ? 0 : 1;
  for (auto& s : sets_) {
    if (static_cast<int>(s.size()) != k_) {
      throw std::invalid_argument("Family: set size differs from declared k");
    }
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < lo || s[i] > n_) {
        throw std::invalid_argument("Family: element outside declared ambient");
      }
      if (i > 0 && s[i] == s[i - 1]) {
        throw std::invalid_argument("Family: duplicate element within a set");
      }
    }
  }
  std::sort(sets_.begin(), sets_.end());
  for (std::size_t i = 1; i < sets_.size(); ++i) {
    if (sets_[i] == sets_[i - 1]) {
      throw std::invalid_argument("Family: duplicate set");
    }
  }
}

Family Family::empty(Elem n, int k, bool zero_anchored) {
  return Family({}, n, k, zero_anchored);
}

bool Family::contains(const std::vector<Elem>& set) const noexcept {
  return std::binary_search(sets_.begin(), sets_.end(), set);
}

Family Family::translated(Elem t) const {
  std::vector<std::vector<Elem>> shifted = sets_;
  for (auto& s : shifted) {
    for (auto& v : s) {
      v += t;
    }
  }
  return Family(std::move(shifted), n_ + t, k_, zero_anchored_);
}

Family Family::dilated(Elem lambda) const {
  if (lambda < 1) {
    throw std::invalid_argument("Family::dilated: lambda must be positive");
  }
  std::vector<std::vector<Elem>> scaled = sets_;
  for (auto& s : scaled) {
    for (auto& v : s) {
      v *= lambda;
    }
  }
  return Family(std::move(scaled), n_ * lambda, k_, zero_anchored_);
}

}  // namespace sidonkit
