#pragma once

#include <cstddef>
#include <cstdint>

namespace wobetti::gf {

// Row-update kernels for Gaussian elimination over GF(p). Entries are kept
// reduced in [0, p) at all times.
//
//   axpy:  y[i] = (y[i] + a * x[i]) mod p
//   scale: y[i] = (a * y[i]) mod p
struct RowKernel {
  void (*axpy)(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a,
               std::uint32_t p, std::size_t n);
  void (*scale)(std::uint32_t* y, std::uint32_t a, std::uint32_t p,
                std::size_t n);
  const char* name;
};

// Portable reference kernel; valid for any p < 2^31 (64-bit intermediates).
const RowKernel& scalar_kernel();

// The AVX2 kernel works in 32-bit lanes: the unreduced value y + a*x is
// bounded by (p-1) + (p-1)^2 = p(p-1), which stays below 2^32 exactly when
// p <= 2^16. Barrett reduction with m = floor(2^32/p) then brings each lane
// back to [0, p) with one conditional subtract.
inline constexpr std::uint32_t kVectorModulusLimit = 65535;

// Null when the binary was built without AVX2 support or the CPU lacks it.
const RowKernel* avx2_kernel_or_null();

// Best kernel usable for modulus p on this machine.
const RowKernel& select_kernel(std::uint32_t p);

}  // namespace wobetti::gf
