#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace sidonkit {

// Element type for set members and sums. All public entry points validate
// against kMaxAmbient, which keeps every intermediate sum (including h-fold
// sumsets for small h) far away from the int64 range.
using Elem = std::int64_t;

// Canonical form of a sumset: strictly increasing, duplicate-free sums.
// Sumsets are compared as sets, so two sumsets are equal iff their keys are.
using SumsetKey = std::vector<Elem>;

// Ambient cap: N <= 2^20 for k <= 8 keeps 4-fold sums below 2^23.
inline constexpr Elem kMaxAmbient = Elem{1} << 20;

// Thrown when a documented desk-scale cap is exceeded (exhaustive searches,
// pair enumeration, h-fold tuple enumeration). Distinct from invalid input.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 64-bit content fingerprint of a sorted sum sequence. Used as the hash key
// in sumset maps; callers must resolve fingerprint collisions by comparing
// full keys.
std::uint64_t fingerprint64(std::span<const Elem> values) noexcept;

// C(n, k) with overflow check; throws std::overflow_error past 2^63.
std::uint64_t binomial_checked(std::uint64_t n, std::uint64_t k);

}  // namespace sidonkit
