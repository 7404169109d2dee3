#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace odsl::arm {

class TokenEstimator {
public:
    virtual ~TokenEstimator() = default;
    virtual std::size_t estimate(std::string_view text) const = 0;
    virtual std::string id() const = 0;
};

// Default heuristic: ceil(characters / 4). A stand-in for a real tokenizer;
// only the relative ordering of prompt sizes matters here.
class HeuristicTokenEstimator final : public TokenEstimator {
public:
    std::size_t estimate(std::string_view text) const override {
        return (text.size() + 3) / 4;
    }
    std::string id() const override { return "heuristic"; }

    static const HeuristicTokenEstimator& instance();
};

}  // namespace odsl::arm
