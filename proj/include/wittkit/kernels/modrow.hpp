#pragma once

// Row kernels for dense elimination over Z/q.
//
// Entries are stored as doubles holding exact integers in [0, q). With
// q < 2^26 every intermediate dst + f*src stays below 2^53, so the SIMD
// variants can reduce with a floating-point quotient and a one-step
// correction while the scalar reference uses 64-bit integer remainders.

#include <cstddef>
#include <string_view>

namespace wittkit::kernels {

/// Largest modulus the kernels accept (exclusive).
inline constexpr double kMaxModulus = 67108864.0;  // 2^26

struct ModRowKernels {
    /// dst[i] = (dst[i] + factor * src[i]) mod q
    void (*axpy)(double* dst, const double* src, double factor, double q, std::size_t n);
    /// v[i] = (factor * v[i]) mod q
    void (*scale)(double* v, double factor, double q, std::size_t n);
    std::string_view name;
};

const ModRowKernels& scalar_kernels();

/// Nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2/FMA.
const ModRowKernels* avx2_kernels();

/// Kernels selected at first use: AVX2 when available, scalar otherwise.
/// Setting WITTKIT_SIMD=scalar in the environment forces the reference path.
const ModRowKernels& active_kernels();

}  // namespace wittkit::kernels
