// Compiled with -mavx2 -mpopcnt; only reached after a runtime CPU check.

#include "ontoq/simd/bitset_kernels.hpp"

#include <immintrin.h>

#include <bit>

namespace ontoq::simd {

namespace {

void or_into_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 8 <= words; i += 8) {
    auto* d = reinterpret_cast<__m256i*>(dst + i);
    const auto* s = reinterpret_cast<const __m256i*>(src + i);
    __m256i a0 = _mm256_loadu_si256(d);
    __m256i a1 = _mm256_loadu_si256(d + 1);
    a0 = _mm256_or_si256(a0, _mm256_loadu_si256(s));
    a1 = _mm256_or_si256(a1, _mm256_loadu_si256(s + 1));
    _mm256_storeu_si256(d, a0);
    _mm256_storeu_si256(d + 1, a1);
  }
  for (; i + 4 <= words; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst + i);
    const auto* s = reinterpret_cast<const __m256i*>(src + i);
    _mm256_storeu_si256(d, _mm256_or_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
  }
  for (; i < words; ++i) dst[i] |= src[i];
}

void and_into_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst + i);
    const auto* s = reinterpret_cast<const __m256i*>(src + i);
    _mm256_storeu_si256(d, _mm256_and_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
  }
  for (; i < words; ++i) dst[i] &= src[i];
}

// Nibble lookup popcount (vpshufb) accumulated with vpsadbw.
std::size_t popcount_avx2(const std::uint64_t* words, std::size_t count) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                          _mm256_shuffle_epi8(lookup, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(bytes, _mm256_setzero_si256()));
  }
  std::size_t total = static_cast<std::size_t>(_mm256_extract_epi64(acc, 0)) +
                      static_cast<std::size_t>(_mm256_extract_epi64(acc, 1)) +
                      static_cast<std::size_t>(_mm256_extract_epi64(acc, 2)) +
                      static_cast<std::size_t>(_mm256_extract_epi64(acc, 3));
  for (; i < count; ++i) total += static_cast<std::size_t>(_mm_popcnt_u64(words[i]));
  return total;
}

bool any_avx2(const std::uint64_t* words, std::size_t count) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= count; i += 4) {
    acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i)));
  }
  if (!_mm256_testz_si256(acc, acc)) return true;
  for (; i < count; ++i) {
    if (words[i] != 0) return true;
  }
  return false;
}

void append_set_bits_avx2(const std::uint64_t* words, std::size_t count, std::uint32_t base,
                          std::vector<std::uint32_t>& out) {
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
    if (_mm256_testz_si256(v, v)) continue;
    for (std::size_t j = i; j < i + 4; ++j) {
      std::uint64_t w = words[j];
      while (w != 0) {
        out.push_back(base + static_cast<std::uint32_t>(j * 64) +
                      static_cast<std::uint32_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }
  for (; i < count; ++i) {
    std::uint64_t w = words[i];
    while (w != 0) {
      out.push_back(base + static_cast<std::uint32_t>(i * 64) +
                    static_cast<std::uint32_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
}

constexpr BitsetKernels kAvx2{Isa::avx2,  or_into_avx2, and_into_avx2, popcount_avx2,
                              any_avx2, append_set_bits_avx2};

}  // namespace

const BitsetKernels* avx2_kernels() { return &kAvx2; }

}  // namespace ontoq::simd
