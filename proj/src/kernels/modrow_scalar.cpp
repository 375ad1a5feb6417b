#include "wittkit/kernels/modrow.hpp"

#include <cstdint>

namespace wittkit::kernels {

namespace {

void axpy_scalar(double* dst, const double* src, double factor, double q, std::size_t n) {
    const auto f = static_cast<std::int64_t>(factor);
    const auto m = static_cast<std::int64_t>(q);
    for (std::size_t i = 0; i < n; ++i) {
        const auto s = static_cast<std::int64_t>(src[i]);
        if (s == 0) continue;
        const auto d = static_cast<std::int64_t>(dst[i]);
        dst[i] = static_cast<double>((d + f * s) % m);
    }
}

void scale_scalar(double* v, double factor, double q, std::size_t n) {
    const auto f = static_cast<std::int64_t>(factor);
    const auto m = static_cast<std::int64_t>(q);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<double>(static_cast<std::int64_t>(v[i]) * f % m);
}

}  // namespace

const ModRowKernels& scalar_kernels() {
    static const ModRowKernels k{axpy_scalar, scale_scalar, "scalar"};
    return k;
}

}  // namespace wittkit::kernels
