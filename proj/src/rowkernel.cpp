#include "wobetti/rowkernel.hpp"

namespace wobetti::gf {

namespace {

void scalar_axpy(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a,
                 std::uint32_t p, std::size_t n) {
  const std::uint64_t a64 = a;
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = static_cast<std::uint32_t>((y[i] + a64 * x[i]) % p);
  }
}

void scalar_scale(std::uint32_t* y, std::uint32_t a, std::uint32_t p,
                  std::size_t n) {
  const std::uint64_t a64 = a;
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = static_cast<std::uint32_t>(a64 * y[i] % p);
  }
}

const RowKernel kScalar{scalar_axpy, scalar_scale, "scalar"};

}  // namespace

const RowKernel& scalar_kernel() { return kScalar; }

#if defined(WOBETTI_HAVE_AVX2)
const RowKernel& avx2_kernel();  // defined in rowkernel_avx2.cpp
#endif

const RowKernel* avx2_kernel_or_null() {
#if defined(WOBETTI_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2")) return &avx2_kernel();
#endif
  return nullptr;
}

const RowKernel& select_kernel(std::uint32_t p) {
  if (p <= kVectorModulusLimit) {
    if (const RowKernel* k = avx2_kernel_or_null()) return *k;
  }
  return kScalar;
}

}  // namespace wobetti::gf
