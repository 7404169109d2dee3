#include "odsl/arm/embedding.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "odsl/arm/vec_ops.hpp"
#include "odsl/support/strings.hpp"

namespace odsl::arm {

std::vector<float> HashedBowEmbedder::embed(const std::string& text) const {
    std::vector<double> acc(dim_, 0.0);
    std::string token;
    bool any = false;
    auto flush = [&] {
        if (token.empty()) return;
        const std::uint64_t h = strings::fnv1a64(token);
        const std::size_t bucket = static_cast<std::size_t>(h % dim_);
        const double sign = ((h >> 32) & 1u) ? 1.0 : -1.0;
        acc[bucket] += sign;
        any = true;
        token.clear();
    };
    for (char c : text) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            token += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        } else {
            flush();
        }
    }
    flush();

    if (!any) {
        std::vector<float> basis(dim_, 0.0f);
        basis[0] = 1.0f;
        return basis;
    }

    double norm = 0.0;
    for (double v : acc) norm += v * v;
    norm = std::sqrt(norm);
    std::vector<float> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) out[i] = static_cast<float>(acc[i] / norm);
    return out;
}

float cosine(const std::vector<float>& a, const std::vector<float>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("cosine: dimension mismatch");
    return vecops::dot(a.data(), b.data(), a.size());
}

double l2_norm(const std::vector<float>& v) {
    double acc = 0.0;
    for (float x : v) acc += static_cast<double>(x) * static_cast<double>(x);
    return std::sqrt(acc);
}

}  // namespace odsl::arm
