// Built only for AArch64 targets.

#include "ontoq/simd/bitset_kernels.hpp"

#include <arm_neon.h>

#include <bit>

namespace ontoq::simd {

namespace {

void or_into_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    vst1q_u64(dst + i, vorrq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  }
  for (; i < words; ++i) dst[i] |= src[i];
}

void and_into_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    vst1q_u64(dst + i, vandq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  }
  for (; i < words; ++i) dst[i] &= src[i];
}

std::size_t popcount_neon(const std::uint64_t* words, std::size_t count) {
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    const uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(words + i)));
    total += vaddvq_u8(bytes);
  }
  for (; i < count; ++i) total += static_cast<std::size_t>(std::popcount(words[i]));
  return total;
}

bool any_neon(const std::uint64_t* words, std::size_t count) {
  std::size_t i = 0;
  uint64x2_t acc = vdupq_n_u64(0);
  for (; i + 2 <= count; i += 2) acc = vorrq_u64(acc, vld1q_u64(words + i));
  if ((vgetq_lane_u64(acc, 0) | vgetq_lane_u64(acc, 1)) != 0) return true;
  for (; i < count; ++i) {
    if (words[i] != 0) return true;
  }
  return false;
}

void append_set_bits_neon(const std::uint64_t* words, std::size_t count, std::uint32_t base,
                          std::vector<std::uint32_t>& out) {
  for (std::size_t i = 0; i < count; ++i) {
    std::uint64_t w = words[i];
    while (w != 0) {
      out.push_back(base + static_cast<std::uint32_t>(i * 64) +
                    static_cast<std::uint32_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
}

constexpr BitsetKernels kNeon{Isa::neon,  or_into_neon, and_into_neon, popcount_neon,
                              any_neon, append_set_bits_neon};

}  // namespace

const BitsetKernels* neon_kernels() { return &kNeon; }

}  // namespace ontoq::simd
