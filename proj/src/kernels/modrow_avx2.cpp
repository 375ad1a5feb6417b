// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include "wittkit/kernels/modrow.hpp"

#include <immintrin.h>

#include <cmath>

namespace wittkit::kernels::avx2 {

namespace {

inline __m256d reduce(__m256d y, __m256d q, __m256d qinv) {
    // y in [0, 2^53): t = floor(y / q) may be off by one either way.
    __m256d t = _mm256_floor_pd(_mm256_mul_pd(y, qinv));
    __m256d r = _mm256_fnmadd_pd(t, q, y);
    __m256d zero = _mm256_setzero_pd();
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), q));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, q, _CMP_GE_OQ), q));
    return r;
}

inline double reduce1(double y, double q) {
    double r = y - std::floor(y / q) * q;
    if (r < 0) r += q;
    if (r >= q) r -= q;
    return r;
}

}  // namespace

void axpy(double* dst, const double* src, double factor, double q, std::size_t n) {
    const __m256d vf = _mm256_set1_pd(factor);
    const __m256d vq = _mm256_set1_pd(q);
    const __m256d vqinv = _mm256_set1_pd(1.0 / q);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_loadu_pd(dst + i);
        __m256d s = _mm256_loadu_pd(src + i);
        __m256d y = _mm256_fmadd_pd(vf, s, d);
        _mm256_storeu_pd(dst + i, reduce(y, vq, vqinv));
    }
    for (; i < n; ++i) dst[i] = reduce1(dst[i] + factor * src[i], q);
}

void scale(double* v, double factor, double q, std::size_t n) {
    const __m256d vf = _mm256_set1_pd(factor);
    const __m256d vq = _mm256_set1_pd(q);
    const __m256d vqinv = _mm256_set1_pd(1.0 / q);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d x = _mm256_loadu_pd(v + i);
        _mm256_storeu_pd(v + i, reduce(_mm256_mul_pd(vf, x), vq, vqinv));
    }
    for (; i < n; ++i) v[i] = reduce1(factor * v[i], q);
}

}  // namespace wittkit::kernels::avx2
