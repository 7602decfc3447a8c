#include "ontoq/simd/bitset_kernels.hpp"

#include <bit>

namespace ontoq::simd {

namespace {

void or_into_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

void and_into_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] &= src[i];
}

std::size_t popcount_scalar(const std::uint64_t* words, std::size_t count) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < count; ++i) total += static_cast<std::size_t>(std::popcount(words[i]));
  return total;
}

bool any_scalar(const std::uint64_t* words, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    if (words[i] != 0) return true;
  }
  return false;
}

void append_set_bits_scalar(const std::uint64_t* words, std::size_t count, std::uint32_t base,
                            std::vector<std::uint32_t>& out) {
  for (std::size_t i = 0; i < count; ++i) {
    std::uint64_t w = words[i];
    while (w != 0) {
      const auto bit = static_cast<std::uint32_t>(std::countr_zero(w));
      out.push_back(base + static_cast<std::uint32_t>(i * 64) + bit);
      w &= w - 1;
    }
  }
}

constexpr BitsetKernels kScalar{Isa::scalar,  or_into_scalar, and_into_scalar, popcount_scalar,
                                any_scalar, append_set_bits_scalar};

}  // namespace

const BitsetKernels& scalar_kernels() { return kScalar; }

}  // namespace ontoq::simd
