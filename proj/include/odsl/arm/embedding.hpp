#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace odsl::arm {

class EmbeddingProvider {
public:
    virtual ~EmbeddingProvider() = default;

    // Unit-length vector, deterministic per (provider, text).
    virtual std::vector<float> embed(const std::string& text) const = 0;
    virtual std::size_t dim() const = 0;
    virtual std::string id() const = 0;
};

// Offline default: hashed bag of words with signed buckets, L2-normalized.
// No model, no network, bitwise deterministic across platforms.
class HashedBowEmbedder final : public EmbeddingProvider {
public:
    explicit HashedBowEmbedder(std::size_t dim = 256) : dim_(dim) {}

    std::vector<float> embed(const std::string& text) const override;
    std::size_t dim() const override { return dim_; }
    std::string id() const override { return "offline"; }

private:
    std::size_t dim_;
};

// Cosine similarity (inputs are unit vectors, so this is the dot product).
float cosine(const std::vector<float>& a, const std::vector<float>& b);

double l2_norm(const std::vector<float>& v);

}  // namespace odsl::arm
