#include <cstdlib>
#include <string>

#include "ontoq/simd/bitset_kernels.hpp"

namespace ontoq::simd {

#if !defined(ONTOQ_HAVE_AVX2)
const BitsetKernels* avx2_kernels() { return nullptr; }
#endif
#if !defined(ONTOQ_HAVE_NEON)
const BitsetKernels* neon_kernels() { return nullptr; }
#endif

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "scalar";
}

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(ONTOQ_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
    case Isa::neon:
#if defined(ONTOQ_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

std::vector<const BitsetKernels*> usable_kernels() {
  std::vector<const BitsetKernels*> out{&scalar_kernels()};
  if (const auto* k = avx2_kernels(); k != nullptr && cpu_supports(Isa::avx2)) out.push_back(k);
  if (const auto* k = neon_kernels(); k != nullptr && cpu_supports(Isa::neon)) out.push_back(k);
  return out;
}

namespace {

const BitsetKernels& select_kernels() {
  const auto usable = usable_kernels();
  if (const char* forced = std::getenv("ONTOQ_SIMD"); forced != nullptr) {
    const std::string wanted(forced);
    for (const auto* k : usable) {
      if (isa_name(k->isa) == wanted) return *k;
    }
  }
  return *usable.back();
}

}  // namespace

const BitsetKernels& active_kernels() {
  static const BitsetKernels& selected = select_kernels();
  return selected;
}

}  // namespace ontoq::simd
