#pragma once

#include <cstdint>
#include <initializer_list>

namespace sidonkit {

// SplitMix64: the 64-bit counter generator of Steele, Lea and Flood. Chosen
// because streams are cheap to derive by key mixing, which makes every
// (seed, n, k, h, p, sample) cell of a sweep an independent, reproducible
// stream regardless of how samples are distributed over threads.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1), 53 bits of entropy.
  double next_unit() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// Derives a stream key by folding the parts through the SplitMix64 mixer;
// order-sensitive, so (seed, n, sample) and (seed, sample, n) differ.
std::uint64_t derive_stream(std::initializer_list<std::uint64_t> parts) noexcept;

// Bit pattern of a double, for keying streams on real-valued parameters.
std::uint64_t bits_of(double value) noexcept;

}  // namespace sidonkit
