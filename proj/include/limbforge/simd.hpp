#pragma once

#include <cstddef>
#include <cstdint>

namespace limbforge::simd {

// Word-array kernels used by every GF(2) bit-row operation. All variants
// compute bit-identical results; only throughput differs.
struct Kernels {
  const char* name;
  void (*xor_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
  void (*and_into)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                   std::size_t words);
  std::size_t (*popcount)(const std::uint64_t* a, std::size_t words);
  std::size_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  bool (*any)(const std::uint64_t* a, std::size_t words);
};

const Kernels& scalar_kernels();

// Null when the CPU lacks AVX2 or the build target is not x86-64.
const Kernels* avx2_kernels();

// The dispatch choice, made once on first use.
const Kernels& active();

}  // namespace limbforge::simd
