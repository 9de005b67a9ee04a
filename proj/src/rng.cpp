#include "sidonkit/rng.hpp"

#include <bit>

namespace sidonkit {

std::uint64_t derive_stream(
    std::initializer_list<std::uint64_t> parts) noexcept {
  std::uint64_t key = 0x8FB6D83D87A31CF5ULL;
  for (std::uint64_t part : parts) {
    SplitMix64 mixer(key ^ (part * 0xD1B54A32D192ED03ULL));
    key = mixer.next();
  }
  return key;
}

std::uint64_t bits_of(double value) noexcept {
  return std::bit_cast<std::uint64_t>(value);
}

}  // namespace sidonkit
