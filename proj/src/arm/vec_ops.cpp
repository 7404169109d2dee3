#include "odsl/arm/vec_ops.hpp"

namespace odsl::arm::vecops {

float dot_scalar(const float* a, const float* b, std::size_t n) {
    float acc = 0.0f;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

namespace {

using DotFn = float (*)(const float*, const float*, std::size_t);

struct Dispatch {
    DotFn fn = dot_scalar;
    const char* name = "scalar";

    Dispatch() {
#if defined(ODSL_HAVE_AVX2)
        if (__builtin_cpu_supports("avx2")) {
            fn = dot_avx2;
            name = "avx2";
        }
#endif
    }
};

const Dispatch& dispatch() {
    static const Dispatch d;
    return d;
}

}  // namespace

float dot(const float* a, const float* b, std::size_t n) {
    return dispatch().fn(a, b, n);
}

const char* active_kernel() {
    return dispatch().name;
}

}  // namespace odsl::arm::vecops
