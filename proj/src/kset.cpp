#include "sidonkit/kset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace sidonkit {

std::uint64_t fingerprint64(std::span<const Elem> values) noexcept {
  std::uint64_t h =
      0x9E3779B97F4A7C15ULL ^ (values.size() * 0xD1B54A32D192ED03ULL);
  for (Elem e : values) {
    std::uint64_t x = static_cast<std::uint64_t>(e) + 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    x ^= x >> 31;
    h = (h ^ x) * 0xFF51AFD7ED558CCDULL;
    h ^= h >> 29;
  }
  return h;
}

std::uint64_t binomial_checked(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // C(n-k+i, i) is integral, so dividing right after multiplying is exact.
    result = result * (n - k + i) / i;
    if (result > (static_cast<unsigned __int128>(1) << 62)) {
      throw std::overflow_error("binomial_checked: C(n,k) exceeds 2^62");
    }
  }
  return static_cast<std::uint64_t>(result);
}

KSet::KSet(std::vector<Elem> elements, Elem ambient_n)
    : elements_(std::move(elements)), ambient_n_(ambient_n) {
  if (elements_.empty()) {
    throw std::invalid_argument("KSet: empty element list");
  }
  if (ambient_n_ < 1 || ambient_n_ > kMaxAmbient) {
    throw std::invalid_argument("KSet: ambient out of range");
  }
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 0 || elements_[i] > ambient_n_) {
      throw std::invalid_argument("KSet: element outside [0, ambient]");
    }
    if (i > 0 && elements_[i] == elements_[i - 1]) {
      throw std::invalid_argument("KSet: duplicate element");
    }
  }
  if (static_cast<Elem>(elements_.size()) > ambient_n_) {
    throw std::invalid_argument("KSet: k exceeds ambient");
  }
}

bool KSet::contains(Elem v) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), v);
}

void SumsetEngine::compute_direct(std::span<const Elem> a,
                                  std::span<const Elem> b, SumsetKey& out) {
  tmp_.clear();
  tmp_.reserve(a.size() * b.size());
  for (Elem x : a) {
    for (Elem y : b) {
      tmp_.push_back(x + y);
    }
  }
  std::sort(tmp_.begin(), tmp_.end());
  tmp_.erase(std::unique(tmp_.begin(), tmp_.end()), tmp_.end());
  out.assign(tmp_.begin(), tmp_.end());
}

void SumsetEngine::compute_bitset(std::span<const Elem> a,
                                  std::span<const Elem> b, SumsetKey& out) {
  std::span<const Elem> shifts = a.size() <= b.size() ? a : b;
  std::span<const Elem> base = a.size() <= b.size() ? b : a;

  const std::size_t base_words =
      static_cast<std::size_t>(base.back()) / 64 + 1;
  src_.assign(base_words, 0);
  for (Elem v : base) {
    src_[static_cast<std::size_t>(v) / 64] |=
        kern::Word{1} << (static_cast<std::size_t>(v) % 64);
  }

  const Elem width = shifts.back() + base.back() + 1;
  const std::size_t dst_words = static_cast<std::size_t>(width) / 64 + 2;
  bits_.assign(dst_words, 0);
  const kern::ShiftOrFn shift_or = kern::shift_or_kernel();
  for (Elem s : shifts) {
    shift_or(bits_.data(), src_.data(), base_words,
             static_cast<std::size_t>(s));
  }

  out.clear();
  for (std::size_t w = 0; w < dst_words; ++w) {
    kern::Word word = bits_[w];
    while (word != 0) {
      const int bit = std::countr_zero(word);
      out.push_back(static_cast<Elem>(w * 64 + static_cast<std::size_t>(bit)));
      word &= word - 1;
    }
  }
}

void SumsetEngine::compute(std::span<const Elem> a, std::span<const Elem> b,
                           SumsetKey& out) {
  const std::size_t product = a.size() * b.size();
  if (product <= 64) {
    compute_direct(a, b, out);
    return;
  }
  const std::size_t words =
      static_cast<std::size_t>(a.back() + b.back()) / 64 + 2;
  const std::size_t smaller = std::min(a.size(), b.size());
  if (words * (smaller + 2) <= 2 * product) {
    compute_bitset(a, b, out);
  } else {
    compute_direct(a, b, out);
  }
}

SumsetKey sumset_sorted(std::span<const Elem> a, std::span<const Elem> b) {
  SumsetEngine engine;
  SumsetKey out;
  engine.compute(a, b, out);
  return out;
}

SumsetKey sumset(const KSet& a, const KSet& b) {
  return sumset_sorted(a.elements(), b.elements());
}

SumsetKey h_fold_sumset(std::span<const KSet> sets) {
  if (sets.empty()) {
    throw std::invalid_argument("h_fold_sumset: empty sequence");
  }
  SumsetEngine engine;
  SumsetKey acc(sets.front().elements());
  SumsetKey next;
  for (std::size_t i = 1; i < sets.size(); ++i) {
    engine.compute(acc, sets[i].elements(), next);
    acc.swap(next);
  }
  return acc;
}

NormalForm normalize(const KSet& a) {
  const Elem base = a.min();
  std::vector<Elem> shifted;
  shifted.reserve(a.k());
  for (Elem v : a.elements()) {
    shifted.push_back(v - base);
  }
  return NormalForm{base, KSet(std::move(shifted), a.ambient())};
}

std::strong_ordering lex_compare(const KSet& a, const KSet& b) {
  if (a.k() != b.k()) {
    throw std::invalid_argument("lex_compare: mismatched set sizes");
  }
  // For equal-size sorted sets, min(A delta B) in A is exactly elementwise
  // lexicographic comparison of the sorted sequences.
  return a.elements() <=> b.elements();
}

KSet dilate(const KSet& a, Elem lambda, Elem ambient_bound) {
  if (lambda < 1) {
    throw std::invalid_argument("dilate: lambda must be positive");
  }
  if (ambient_bound > kMaxAmbient) {
    throw std::overflow_error("dilate: ambient bound beyond global cap");
  }
  if (a.max() > ambient_bound / lambda) {
    throw std::overflow_error("dilate: lambda * max exceeds ambient bound");
  }
  std::vector<Elem> scaled;
  scaled.reserve(a.k());
  for (Elem v : a.elements()) {
    scaled.push_back(v * lambda);
  }
  return KSet(std::move(scaled), ambient_bound);
}

KSet dual_3set(const KSet& x) {
  if (x.k() != 3) {
    throw std::invalid_argument("dual_3set: set must have exactly 3 elements");
  }
  if (x.min() != 0) {
    throw std::invalid_argument("dual_3set: set must contain 0");
  }
  const Elem x1 = x.elements()[1];
  const Elem x2 = x.elements()[2];
  return KSet({0, x2 - x1, x2}, x.ambient());
}

}  // namespace sidonkit
