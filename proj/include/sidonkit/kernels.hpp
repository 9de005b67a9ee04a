#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Bit-vector kernels behind the sumset engine. A zero-anchored integer set
// over [0, W) is a packed array of 64-bit words, bit i = membership of i.
// The sumset A+B is the union over a in A of (bits(B) << a), so the whole
// engine reduces to one hot primitive: OR a bit-shifted copy of one word
// array into another.
//
// Two implementations are provided: a portable scalar reference and an AVX2
// variant (x86 only). The active kernel is chosen once at startup from CPU
// capabilities; SIDONKIT_KERNEL=scalar|avx2 in the environment overrides the
// choice. Both are equivalence-tested against each other.

namespace sidonkit::kern {

using Word = std::uint64_t;

// dst |= src << shift_bits.
// src holds n words; dst must provide at least shift_bits/64 + n + 1 words.
// Only ORs into dst, never clears.
void shift_or_scalar(Word* dst, const Word* src, std::size_t n,
                     std::size_t shift_bits) noexcept;

#if defined(__x86_64__) || defined(__i386__)
void shift_or_avx2(Word* dst, const Word* src, std::size_t n,
                   std::size_t shift_bits) noexcept;
bool cpu_has_avx2() noexcept;
#endif

using ShiftOrFn = void (*)(Word*, const Word*, std::size_t,
                           std::size_t) noexcept;

// Kernel selected at startup (stable for the process lifetime).
ShiftOrFn shift_or_kernel() noexcept;

// "scalar" or "avx2" - which implementation shift_or_kernel() returns.
std::string_view kernel_name() noexcept;

}  // namespace sidonkit::kern
