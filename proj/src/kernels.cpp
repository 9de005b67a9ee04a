#include "sidonkit/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace sidonkit::kern {

void shift_or_scalar(Word* dst, const Word* src, std::size_t n,
                     std::size_t shift_bits) noexcept {
  const std::size_t wq = shift_bits / 64;
  const unsigned r = static_cast<unsigned>(shift_bits % 64);
  Word* out = dst + wq;
  if (r == 0) {
    for (std::size_t i = 0; i < n; ++i) {
      out[i] |= src[i];
    }
    return;
  }
  const unsigned rl = 64U - r;
  Word carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Word v = src[i];
    out[i] |= (v << r) | carry;
    carry = v >> rl;
  }
  out[n] |= carry;
}

namespace {

ShiftOrFn pick_kernel() noexcept {
#if defined(__x86_64__) || defined(__i386__)
  const char* env = std::getenv("SIDONKIT_KERNEL");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) {
    return &shift_or_scalar;
  }
  if (cpu_has_avx2()) {
    return &shift_or_avx2;
  }
#endif
  return &shift_or_scalar;
}

}  // namespace

ShiftOrFn shift_or_kernel() noexcept {
  static const ShiftOrFn fn = pick_kernel();
  return fn;
}

std::string_view kernel_name() noexcept {
#if defined(__x86_64__) || defined(__i386__)
  if (shift_or_kernel() == &shift_or_avx2) {
    return "avx2";
  }
#endif
  return "scalar";
}

}  // namespace sidonkit::kern
