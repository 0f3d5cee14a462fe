#include "wobetti/rowkernel.hpp"

#if defined(WOBETTI_HAVE_AVX2)

#include <immintrin.h>

namespace wobetti::gf {

namespace {

// High 32 bits of the unsigned 32x32 product, per lane.
inline __m256i mulhi_epu32(__m256i a, __m256i b) {
  __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(a, b), 32);
  __m256i odd =
      _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
  return _mm256_blend_epi32(even, odd, 0b10101010);
}

// Barrett step: reduce lanes of t (t < 2^32) to [0, p). m = floor(2^32/p),
// so q = mulhi(t, m) is floor(t/p) or one less, leaving t - q*p in [0, 2p).
inline __m256i barrett_reduce(__m256i t, __m256i m, __m256i p_vec) {
  __m256i q = mulhi_epu32(t, m);
  __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(q, p_vec));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, p_vec));
}

void avx2_axpy(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a,
               std::uint32_t p, std::size_t n) {
  const std::uint32_t m = static_cast<std::uint32_t>((1ull << 32) / p);
  const __m256i a_vec = _mm256_set1_epi32(static_cast<int>(a));
  const __m256i m_vec = _mm256_set1_epi32(static_cast<int>(m));
  const __m256i p_vec = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    __m256i t = _mm256_add_epi32(yv, _mm256_mullo_epi32(xv, a_vec));
    __m256i r = barrett_reduce(t, m_vec, p_vec);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), r);
  }
  for (; i < n; ++i) {
    y[i] = static_cast<std::uint32_t>(
        (y[i] + static_cast<std::uint64_t>(a) * x[i]) % p);
  }
}

void avx2_scale(std::uint32_t* y, std::uint32_t a, std::uint32_t p,
                std::size_t n) {
  const std::uint32_t m = static_cast<std::uint32_t>((1ull << 32) / p);
  const __m256i a_vec = _mm256_set1_epi32(static_cast<int>(a));
  const __m256i m_vec = _mm256_set1_epi32(static_cast<int>(m));
  const __m256i p_vec = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    __m256i t = _mm256_mullo_epi32(yv, a_vec);
    __m256i r = barrett_reduce(t, m_vec, p_vec);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), r);
  }
  for (; i < n; ++i) {
    y[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * y[i] % p);
  }
}

const RowKernel kAvx2{avx2_axpy, avx2_scale, "avx2"};

}  // namespace

const RowKernel& avx2_kernel() { return kAvx2; }

}  // namespace wobetti::gf

#endif  // WOBETTI_HAVE_AVX2
