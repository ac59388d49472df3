// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include <bit>

#include "kernels_internal.hpp"

namespace polyprod::kernels::avx2 {

void axpy_mod_p(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::uint32_t p,
                std::size_t n) {
    const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
    const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
    const __m256d vf = _mm256_set1_pd(static_cast<double>(factor));
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m128i s = _mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i));
        const __m128i d = _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i));
        // t < 2^52, so t and q*p are exact doubles; q may be off by one.
        const __m256d t = _mm256_fmadd_pd(vf, _mm256_cvtepi32_pd(s), _mm256_cvtepi32_pd(d));
        const __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, vinv));
        __m256d r = _mm256_fnmadd_pd(q, vp, t);
        r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), vp));
        r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), _mm256_cvtpd_epi32(r));
    }
    scalar::axpy_mod_p(dst + i, src + i, factor, p, n - i);
}

void xor_rows(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
    }
    scalar::xor_rows(dst + i, src + i, n - i);
}

std::size_t slice_filter(const std::uint64_t* faces, std::size_t n, std::uint64_t sigma,
                         std::uint64_t allowed, std::uint64_t* out) {
    const __m256i vs = _mm256_set1_epi64x(static_cast<long long>(sigma));
    const __m256i vforbid = _mm256_set1_epi64x(static_cast<long long>(~allowed));
    const __m256i zero = _mm256_setzero_si256();
    std::size_t k = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i f = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(faces + i));
        const __m256i has_sigma = _mm256_cmpeq_epi64(_mm256_and_si256(f, vs), vs);
        const __m256i inside = _mm256_cmpeq_epi64(_mm256_and_si256(f, vforbid), zero);
        auto mask = static_cast<unsigned>(
            _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_and_si256(has_sigma, inside))));
        while (mask != 0) {
            const int j = std::countr_zero(mask);
            out[k++] = faces[i + static_cast<std::size_t>(j)] & ~sigma;
            mask &= mask - 1;
        }
    }
    return k + scalar::slice_filter(faces + i, n - i, sigma, allowed, out + k);
}

}  // namespace polyprod::kernels::avx2
