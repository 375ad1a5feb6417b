#include "wittkit/kernels/modrow.hpp"

#include <cstdlib>
#include <cstring>

#if defined(WITTKIT_HAVE_AVX2)
namespace wittkit::kernels::avx2 {
void axpy(double* dst, const double* src, double factor, double q, std::size_t n);
void scale(double* v, double factor, double q, std::size_t n);
}  // namespace wittkit::kernels::avx2
#endif

namespace wittkit::kernels {

const ModRowKernels* avx2_kernels() {
#if defined(WITTKIT_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    static const ModRowKernels k{avx2::axpy, avx2::scale, "avx2"};
    return supported ? &k : nullptr;
#else
    return nullptr;
#endif
}

const ModRowKernels& active_kernels() {
    static const ModRowKernels& chosen = [] () -> const ModRowKernels& {
        const char* env = std::getenv("WITTKIT_SIMD");
        if (env != nullptr && std::strcmp(env, "scalar") == 0) return scalar_kernels();
        if (const auto* k = avx2_kernels()) return *k;
        return scalar_kernels();
    }();
    return chosen;
}

}  // namespace wittkit::kernels
