#include "sidonkit/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "sidonkit/kset.hpp"
#include "sidonkit/verifier.hpp"

namespace sidonkit {

namespace {

Elem ceil_div(Elem num, Elem den) { return (num + den - 1) / den; }

bool is_prime(Elem p) {
  if (p < 2) {
    return false;
  }
  for (Elem d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      return false;
    }
  }
  return true;
}

Elem smallest_prime_geq(Elem k) {
  Elem p = std::max<Elem>(k, 2);
  while (!is_prime(p)) {
    ++p;
  }
  return p;
}

// Rebuild a family of sets all containing a common minimum as the
// zero-anchored family of their translates.
Family reanchored(const Family& f, Elem new_ambient) {
  std::vector<std::vector<Elem>> sets;
  sets.reserve(f.size());
  for (const auto& s : f.sets()) {
    std::vector<Elem> shifted;
    shifted.reserve(s.size());
    for (Elem v : s) {
      shifted.push_back(v - s.front());
    }
    sets.push_back(std::move(shifted));
  }
  return Family(std::move(sets), new_ambient, f.k(), /*zero_anchored=*/true);
}

}  // namespace

bool is_sidon_set(const std::vector<Elem>& sorted_elements) {
  return max_pair_representation(sorted_elements) <= 1;
}

std::uint64_t max_pair_representation(const std::vector<Elem>& elements) {
  std::unordered_map<Elem, std::uint64_t> reps;
  reps.reserve(elements.size() * elements.size());
  std::uint64_t max_count = 0;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i; j < elements.size(); ++j) {
      max_count = std::max(max_count, ++reps[elements[i] + elements[j]]);
    }
  }
  return max_count;
}

SidonBase erdos_turan_sidon(int k) {
  if (k < 2) {
    throw std::invalid_argument("erdos_turan_sidon: k must be >= 2");
  }
  const Elem p = smallest_prime_geq(k);
  std::vector<Elem> elems;
  elems.reserve(static_cast<std::size_t>(k));
  for (Elem i = 0; i < k; ++i) {
    elems.push_back(2 * p * i + (i * i) % p);
  }
  if (!is_sidon_set(elems)) {
    throw std::logic_error("erdos_turan_sidon: generated base is not Sidon");
  }
  return SidonBase{std::move(elems), p};
}

SidonBase minimal_sidon_base(int k) {
  static const std::vector<std::vector<Elem>> table = {
      {0},
      {0, 1},
      {0, 1, 3},
      {0, 1, 4, 6},
      {0, 1, 4, 9, 11},
      {0, 1, 4, 10, 12, 17},
      {0, 1, 4, 10, 18, 23, 25},
      {0, 1, 4, 9, 15, 22, 32, 34},
  };
  if (k < 1 || k > static_cast<int>(table.size())) {
    throw std::invalid_argument("minimal_sidon_base: table covers 1 <= k <= 8");
  }
  return SidonBase{table[static_cast<std::size_t>(k - 1)], 0};
}

Family construct_k2(Elem n) {
  if (n < 3) {
    throw std::invalid_argument("construct_k2: n must be >= 3");
  }
  std::vector<std::vector<Elem>> sets;
  sets.reserve(static_cast<std::size_t>(2 * n - 3));
  for (Elem i = 1; i <= n - 1; ++i) {
    sets.push_back({1, 1 + i});
  }
  for (Elem i = 1; i <= n - 2; ++i) {
    sets.push_back({n - i, n});
  }
  return Family(std::move(sets), n, 2, /*zero_anchored=*/false);
}

Family construct_k3(Elem n) {
  if (n < 5) {
    throw std::invalid_argument("construct_k3: n must be >= 5");
  }
  std::vector<std::vector<Elem>> sets;
  for (Elem a = 1; a < n - 1; ++a) {
    for (Elem b = a + 1; b <= n - 1; ++b) {
      // Excluded dilations that fit below n: lambda*{0,1,2} has b = 2a,
      // lambda*{0,1,3} has b = 3a.
      if (b == 2 * a || b == 3 * a) {
        continue;
      }
      sets.push_back({1, 1 + a, 1 + b});
    }
  }
  return Family(std::move(sets), n, 3, /*zero_anchored=*/false);
}

K4Construction construct_k4_detailed(Elem n, int k,
                                     std::optional<SidonBase> base) {
  if (k < 3) {
    throw std::invalid_argument("construct_k4: k must be >= 3");
  }
  SidonBase b = base.has_value() ? std::move(*base) : erdos_turan_sidon(k);
  std::sort(b.elements.begin(), b.elements.end());
  if (static_cast<int>(b.elements.size()) != k || b.elements.front() != 0) {
    throw std::invalid_argument(
        "construct_k4: base must be a zero-anchored k-set");
  }
  if (!is_sidon_set(b.elements)) {
    throw std::invalid_argument("construct_k4: base is not a Sidon set");
  }
  const Elem d = b.elements.back() + 1;
  if (n < 2 * d) {
    throw std::invalid_argument("construct_k4: requires n >= 2*(max(base)+1) = " +
                                std::to_string(2 * d));
  }
  if (n > kMaxAmbient) {
    throw std::invalid_argument("construct_k4: n beyond global ambient cap");
  }

  // I_i = [n*a_i/d, n*(a_i + 1/2)/d) over the integers, by exact ceiling
  // arithmetic: x < p/q over integers is x < ceil(p/q).
  std::vector<IntervalSpec> intervals;
  intervals.push_back(IntervalSpec{0, 0, 1});
  for (int i = 1; i < k; ++i) {
    const Elem a = b.elements[static_cast<std::size_t>(i)];
    const Elem lo = ceil_div(n * a, d);
    const Elem hi = ceil_div(n * (2 * a + 1), 2 * d);
    if (hi <= lo) {
      throw std::logic_error("construct_k4: empty interval");
    }
    intervals.push_back(IntervalSpec{i, lo, hi});
  }

  // The decoding argument needs all interval-sums I_i + I_j pairwise
  // disjoint across unordered index pairs; check exhaustively.
  struct SumRange {
    Elem lo, hi;  // inclusive
  };
  std::vector<SumRange> ranges;
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      const auto& ii = intervals[static_cast<std::size_t>(i)];
      const auto& ij = intervals[static_cast<std::size_t>(j)];
      ranges.push_back(SumRange{ii.lower + ij.lower, ii.upper + ij.upper - 2});
    }
  }
  for (std::size_t x = 0; x < ranges.size(); ++x) {
    for (std::size_t y = x + 1; y < ranges.size(); ++y) {
      if (ranges[x].lo <= ranges[y].hi && ranges[y].lo <= ranges[x].hi) {
        throw std::logic_error(
            "construct_k4: interval sums overlap; base unusable at this n");
      }
    }
  }

  unsigned __int128 product = 1;
  for (int i = 1; i < k; ++i) {
    product *= static_cast<unsigned __int128>(
        intervals[static_cast<std::size_t>(i)].size());
    if (product > (std::uint64_t{1} << 22)) {
      throw CapExceeded("construct_k4: family size cap exceeded");
    }
  }

  // Odometer over the product of intervals 1..k-1; sets are shifted by 1.
  std::vector<std::vector<Elem>> sets;
  sets.reserve(static_cast<std::size_t>(product));
  std::vector<Elem> current(static_cast<std::size_t>(k));
  for (int i = 1; i < k; ++i) {
    current[static_cast<std::size_t>(i)] =
        intervals[static_cast<std::size_t>(i)].lower;
  }
  for (;;) {
    std::vector<Elem> set;
    set.reserve(static_cast<std::size_t>(k));
    set.push_back(1);
    for (int i = 1; i < k; ++i) {
      set.push_back(current[static_cast<std::size_t>(i)] + 1);
    }
    sets.push_back(std::move(set));
    int pos = k - 1;
    while (pos >= 1) {
      auto& value = current[static_cast<std::size_t>(pos)];
      if (++value < intervals[static_cast<std::size_t>(pos)].upper) {
        break;
      }
      value = intervals[static_cast<std::size_t>(pos)].lower;
      --pos;
    }
    if (pos == 0) {
      break;
    }
  }

  return K4Construction{Family(std::move(sets), n, k, /*zero_anchored=*/false),
                        std::move(b), std::move(intervals)};
}

Family construct_k4(Elem n, int k, std::optional<SidonBase> base) {
  return construct_k4_detailed(n, k, std::move(base)).family;
}

std::pair<std::vector<Elem>, std::vector<Elem>> decode_k4_sumset(
    const K4Construction& construction, const SumsetKey& key) {
  const int k = construction.family.k();
  const auto& intervals = construction.intervals;

  // Family members are shifted by 1, so the raw sums carry an offset of 2.
  std::vector<Elem> sums;
  sums.reserve(key.size());
  for (Elem v : key) {
    sums.push_back(v - 2);
  }

  auto window = [&sums](Elem lo, Elem hi_inclusive) {
    std::vector<Elem> hits;
    for (Elem v : sums) {
      if (v >= lo && v <= hi_inclusive) {
        hits.push_back(v);
      }
    }
    return hits;
  };

  std::vector<Elem> u(static_cast<std::size_t>(k), 0);
  std::vector<Elem> v(static_cast<std::size_t>(k), 0);
  int first_split = -1;
  for (int i = 1; i < k; ++i) {
    const auto& spec = intervals[static_cast<std::size_t>(i)];
    const std::vector<Elem> hits = window(spec.lower, spec.upper - 1);
    if (hits.empty() || hits.size() > 2) {
      throw std::invalid_argument("decode_k4_sumset: malformed key");
    }
    if (hits.size() == 1) {
      if (first_split < 0) {
        u[static_cast<std::size_t>(i)] = hits[0];
        v[static_cast<std::size_t>(i)] = hits[0];
      }
      continue;
    }
    if (first_split < 0) {
      first_split = i;
      u[static_cast<std::size_t>(i)] = hits[0];
      v[static_cast<std::size_t>(i)] = hits[1];
    }
  }

  if (first_split >= 0) {
    const Elem u0 = u[static_cast<std::size_t>(first_split)];
    const Elem v0 = v[static_cast<std::size_t>(first_split)];
    const auto& spec0 = intervals[static_cast<std::size_t>(first_split)];
    for (int i = first_split + 1; i < k; ++i) {
      const auto& spec = intervals[static_cast<std::size_t>(i)];
      const std::vector<Elem> hits = window(spec.lower, spec.upper - 1);
      if (hits.size() == 1) {
        u[static_cast<std::size_t>(i)] = hits[0];
        v[static_cast<std::size_t>(i)] = hits[0];
        continue;
      }
      if (hits.size() != 2) {
        throw std::invalid_argument("decode_k4_sumset: malformed key");
      }
      // Cross window I_{i0} + I_i disambiguates which component of the pair
      // belongs to U: it contains exactly {u0 + v_i, u_i + v0}.
      std::vector<Elem> cross = window(spec0.lower + spec.lower,
                                       spec0.upper + spec.upper - 2);
      std::sort(cross.begin(), cross.end());
      auto matches = [&cross](Elem s1, Elem s2) {
        std::vector<Elem> expect{s1, s2};
        std::sort(expect.begin(), expect.end());
        expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
        return cross == expect;
      };
      if (matches(u0 + hits[1], hits[0] + v0)) {
        u[static_cast<std::size_t>(i)] = hits[0];
        v[static_cast<std::size_t>(i)] = hits[1];
      } else if (matches(u0 + hits[0], hits[1] + v0)) {
        u[static_cast<std::size_t>(i)] = hits[1];
        v[static_cast<std::size_t>(i)] = hits[0];
      } else {
        throw std::invalid_argument("decode_k4_sumset: inconsistent key");
      }
    }
  }

  std::vector<Elem> set_u, set_v;
  set_u.reserve(static_cast<std::size_t>(k));
  set_v.reserve(static_cast<std::size_t>(k));
  set_u.push_back(1);
  set_v.push_back(1);
  for (int i = 1; i < k; ++i) {
    set_u.push_back(u[static_cast<std::size_t>(i)] + 1);
    set_v.push_back(v[static_cast<std::size_t>(i)] + 1);
  }
  if (set_v < set_u) {
    set_u.swap(set_v);
  }
  if (sumset_sorted(set_u, set_v) != key) {
    throw std::invalid_argument(
        "decode_k4_sumset: key is not a sumset of two family members");
  }
  return {std::move(set_u), std::move(set_v)};
}

namespace {

// Largest Erdos-Turan base (shifted by 1) fitting inside [1, limit]; falls
// back to tiny hand Sidon sets below the smallest ET footprint.
std::vector<Elem> sidon_set_in_range(Elem limit) {
  if (limit < 1) {
    throw std::invalid_argument("sidon_set_in_range: empty range");
  }
  std::vector<Elem> best{1};
  if (limit >= 2) {
    best = {1, 2};
  }
  if (limit >= 4) {
    best = {1, 2, 4};
  }
  for (int k = 2;; ++k) {
    SidonBase base = erdos_turan_sidon(k);
    if (base.elements.back() + 1 > limit) {
      break;
    }
    if (static_cast<std::size_t>(k) >= best.size()) {
      best.clear();
      for (Elem e : base.elements) {
        best.push_back(e + 1);
      }
    }
  }
  return best;
}

}  // namespace

std::vector<Elem> base_b2g_set(Elem m, int g_half) {
  if (m < 2 || g_half < 1) {
    throw std::invalid_argument("base_b2g_set: infeasible parameters");
  }
  const Elem gamma = g_half;
  // Block layout: a Sidon set in [1, s0], replicated gamma times with
  // spacing 2*s0 + 1, so that the block index of a pairwise sum is uniquely
  // determined and every sum has at most gamma representations.
  Elem s0 = gamma == 1 ? m : (m - gamma + 1) / (2 * gamma - 1);
  while (s0 >= 1) {
    const std::vector<Elem> seed = sidon_set_in_range(s0);
    const Elem spacing = 2 * s0 + 1;
    std::vector<Elem> result;
    result.reserve(seed.size() * static_cast<std::size_t>(gamma));
    for (Elem block = 0; block < gamma; ++block) {
      for (Elem e : seed) {
        result.push_back(e + block * spacing);
      }
    }
    std::sort(result.begin(), result.end());
    if (result.back() <= m &&
        max_pair_representation(result) <= static_cast<std::uint64_t>(g_half)) {
      return result;
    }
    --s0;
  }
  throw std::invalid_argument("base_b2g_set: infeasible parameters");
}

B2gConstruction construct_b2g_detailed(Elem n, int k, int g) {
  if (g < 2 || k < 2) {
    throw std::invalid_argument("construct_b2g: requires g >= 2 and k >= 2");
  }
  const Elem m = n / 2;
  if (m < 2) {
    throw std::invalid_argument("construct_b2g: n too small");
  }
  std::vector<Elem> base = base_b2g_set(m, g / 2);

  Family inner = [&]() -> Family {
    if (k == 2) {
      std::vector<std::vector<Elem>> sets;
      for (Elem i = 1; i <= m; ++i) {
        sets.push_back({0, i});
      }
      return Family(std::move(sets), m, 2, /*zero_anchored=*/true);
    }
    if (k == 3) {
      if (m < 5) {
        throw std::invalid_argument("construct_b2g: n too small for k = 3");
      }
      return reanchored(construct_k3(m), m);
    }
    return reanchored(construct_k4(m, k), m);
  }();

  if (inner.size() == 0) {
    throw std::invalid_argument("construct_b2g: inner Sidon system is empty");
  }

  std::vector<std::vector<Elem>> sets;
  sets.reserve(base.size() * inner.size());
  for (Elem a : base) {
    for (const auto& inner_set : inner.sets()) {
      std::vector<Elem> shifted;
      shifted.reserve(inner_set.size());
      for (Elem v : inner_set) {
        shifted.push_back(v + a);
      }
      sets.push_back(std::move(shifted));
    }
  }
  Family family(std::move(sets), n, k, /*zero_anchored=*/false);
  if (family.size() != base.size() * inner.size()) {
    throw std::logic_error("construct_b2g: translate collision in product");
  }
  return B2gConstruction{std::move(family), std::move(base),
                         std::move(inner)};
}

Family construct_b2g(Elem n, int k, int g) {
  return construct_b2g_detailed(n, k, g).family;
}

}  // namespace sidonkit
