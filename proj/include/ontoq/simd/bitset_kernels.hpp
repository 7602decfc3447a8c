#pragma once

// Word-parallel kernels over packed 64-bit bitsets. The scalar table is the
// reference; vector tables must agree with it bit for bit. One table is
// selected at first use from what the CPU reports, overridable through the
// ONTOQ_SIMD environment variable (scalar | avx2 | neon).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace ontoq::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

struct BitsetKernels {
  Isa isa;

  // dst[i] |= src[i]
  void (*or_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
  // dst[i] &= src[i]
  void (*and_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
  std::size_t (*popcount)(const std::uint64_t* words, std::size_t count);
  bool (*any)(const std::uint64_t* words, std::size_t count);
  // Appends base + position for every set bit, in increasing position order.
  void (*append_set_bits)(const std::uint64_t* words, std::size_t count, std::uint32_t base,
                          std::vector<std::uint32_t>& out);
};

const BitsetKernels& scalar_kernels();

// nullptr when the variant was not compiled into this build.
const BitsetKernels* avx2_kernels();
const BitsetKernels* neon_kernels();

bool cpu_supports(Isa isa);

// Every compiled variant the running CPU can execute, scalar first.
std::vector<const BitsetKernels*> usable_kernels();

const BitsetKernels& active_kernels();

inline void or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  active_kernels().or_into(dst.data(), src.data(), dst.size() < src.size() ? dst.size() : src.size());
}

inline void and_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  active_kernels().and_into(dst.data(), src.data(), dst.size() < src.size() ? dst.size() : src.size());
}

inline std::size_t popcount(std::span<const std::uint64_t> words) {
  return active_kernels().popcount(words.data(), words.size());
}

inline bool any(std::span<const std::uint64_t> words) {
  return active_kernels().any(words.data(), words.size());
}

inline void append_set_bits(std::span<const std::uint64_t> words, std::uint32_t base,
                            std::vector<std::uint32_t>& out) {
  active_kernels().append_set_bits(words.data(), words.size(), base, out);
}

}  // namespace ontoq::simd
