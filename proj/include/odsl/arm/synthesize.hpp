#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "odsl/arm/bank.hpp"
#include "odsl/arm/prompt.hpp"
#include "odsl/arm/providers.hpp"
#include "odsl/fix/fixer.hpp"
#include "odsl/lang/registry.hpp"

namespace odsl::arm {

class SynthesisError : public std::runtime_error {
public:
    explicit SynthesisError(const std::string& what, bool provider_failure = false)
        : std::runtime_error(what), provider_failure_(provider_failure) {}

    // True when the underlying cause was the provider or the network.
    bool provider_failure() const { return provider_failure_; }

private:
    bool provider_failure_;
};

struct SynthesisOutcome {
    Program program;               // after auto-correction
    autofix::FixReport fix_report;
    AnalysisResult analysis;
    PromptBundle prompt;
    std::string raw_completion;
};

// The full utterance-to-program pipeline: classify, retrieve entity-covering
// samples, build the prompt, complete, parse, check, auto-correct and
// revalidate. Provider and parse failures surface as SynthesisError;
// unfixable diagnostics stay in the fix report.
SynthesisOutcome synthesize(const std::string& utterance, const nlohmann::json* context,
                            const SampleBank& bank, const RetrievalConfig& config,
                            LLMClient& llm, const EmbeddingProvider& embedder,
                            const ArmData& data, const Registry& registry,
                            const TokenEstimator& tokens);

}  // namespace odsl::arm
