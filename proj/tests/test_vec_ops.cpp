#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "odsl/arm/vec_ops.hpp"

using namespace odsl::arm;

namespace {

std::vector<float> random_vec(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<float> dist(-1.0f, 1.0f);
    std::vector<float> v(n);
    for (auto& x : v) x = dist(rng);
    return v;
}

}  // namespace

TEST_CASE("scalar reference kernel computes the dot product") {
    const float a[] = {1.0f, 2.0f, 3.0f};
    const float b[] = {4.0f, -5.0f, 6.0f};
    CHECK(vecops::dot_scalar(a, b, 3) == doctest::Approx(12.0f));
    CHECK(vecops::dot_scalar(a, b, 0) == 0.0f);
}

TEST_CASE("dispatched kernel matches the scalar reference") {
    std::mt19937_64 rng(42);
    // Sizes straddle the 8-lane boundary on purpose.
    for (std::size_t n : {1u, 7u, 8u, 9u, 31u, 64u, 255u, 256u, 300u}) {
        for (int trial = 0; trial < 20; ++trial) {
            auto a = random_vec(rng, n);
            auto b = random_vec(rng, n);
            const float expected = vecops::dot_scalar(a.data(), b.data(), n);
            const float actual = vecops::dot(a.data(), b.data(), n);
            CHECK(actual == doctest::Approx(expected).epsilon(1e-4));
        }
    }
}

#if defined(ODSL_HAVE_AVX2)
TEST_CASE("avx2 kernel equivalence (when the CPU has it)") {
    if (!__builtin_cpu_supports("avx2")) {
        MESSAGE("CPU lacks AVX2; dispatcher uses scalar: ", vecops::active_kernel());
        CHECK(std::string(vecops::active_kernel()) == "scalar");
        return;
    }
    CHECK(std::string(vecops::active_kernel()) == "avx2");
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 384;
        auto a = random_vec(rng, n);
        auto b = random_vec(rng, n);
        const float expected = vecops::dot_scalar(a.data(), b.data(), n);
        const float actual = vecops::dot_avx2(a.data(), b.data(), n);
        CHECK(std::abs(actual - expected) <= 1e-4f * (1.0f + std::abs(expected)));
    }
}
#endif
