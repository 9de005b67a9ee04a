// AVX2 variant of the shift-or kernel. Compiled with -mavx2 in its own
// translation unit; only reached through runtime dispatch.

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include "sidonkit/kernels.hpp"

namespace sidonkit::kern {

bool cpu_has_avx2() noexcept { return __builtin_cpu_supports("avx2") != 0; }

void shift_or_avx2(Word* dst, const Word* src, std::size_t n,
                   std::size_t shift_bits) noexcept {
  const std::size_t wq = shift_bits / 64;
  const unsigned r = static_cast<unsigned>(shift_bits % 64);
  Word* out = dst + wq;

  if (r == 0) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
      const __m256i s =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
      __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + i));
      d = _mm256_or_si256(d, s);
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), d);
    }
    for (; i < n; ++i) {
      out[i] |= src[i];
    }
    return;
  }

  const unsigned rl = 64U - r;
  // out[i] |= (src[i] << r) | (src[i-1] >> rl). The i = 0 word and the tail
  // run scalar; the vector body reads src[i-1..i+2] with unaligned loads.
  out[0] |= src[0] << r;
  const __m128i cr = _mm_cvtsi32_si128(static_cast<int>(r));
  const __m128i crl = _mm_cvtsi32_si128(static_cast<int>(rl));
  std::size_t i = 1;
  for (; i + 4 <= n; i += 4) {
    const __m256i cur =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i prev =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i - 1));
    const __m256i v = _mm256_or_si256(_mm256_sll_epi64(cur, cr),
                                      _mm256_srl_epi64(prev, crl));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + i));
    d = _mm256_or_si256(d, v);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), d);
  }
  for (; i < n; ++i) {
    out[i] |= (src[i] << r) | (src[i - 1] >> rl);
  }
  out[n] |= src[n - 1] >> rl;
}

}  // namespace sidonkit::kern

#endif  // x86
