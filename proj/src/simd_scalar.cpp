#include "limbforge/simd.hpp"

namespace limbforge::simd {
namespace {

void xor_into_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

void and_into_scalar(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                     std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] = a[i] & b[i];
}

std::size_t popcount_scalar(const std::uint64_t* a, std::size_t words) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words; ++i) c += static_cast<std::size_t>(__builtin_popcountll(a[i]));
  return c;
}

std::size_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words; ++i)
    c += static_cast<std::size_t>(__builtin_popcountll(a[i] & b[i]));
  return c;
}

bool any_scalar(const std::uint64_t* a, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if (a[i] != 0) return true;
  return false;
}

const Kernels kScalar{"scalar", xor_into_scalar, and_into_scalar, popcount_scalar,
                      and_popcount_scalar, any_scalar};

}  // namespace

const Kernels& scalar_kernels() { return kScalar; }

const Kernels& active() {
  static const Kernels* chosen = [] {
    const Kernels* k = avx2_kernels();
    return k != nullptr ? k : &kScalar;
  }();
  return *chosen;
}

}  // namespace limbforge::simd
