#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "odsl/arm/arm_data.hpp"
#include "odsl/arm/classify.hpp"
#include "odsl/arm/retrieval.hpp"
#include "odsl/arm/tokenizer.hpp"

namespace odsl::arm {

struct RetrievalConfig {
    int k = 5;
    int token_budget = 4097;
    int completion_allowance = 512;  // reserved for the model's output
    std::string embedding_provider = "offline";
    std::string llm_provider = "mock";
    std::string classifier = "llm";  // "llm" | "rules"
    double temperature = 0.0;
    double top_p = 1.0;
};

class BudgetUnsatisfiable : public std::runtime_error {
public:
    explicit BudgetUnsatisfiable(std::size_t estimate, std::size_t budget)
        : std::runtime_error("prompt needs " + std::to_string(estimate) +
                             " tokens but only " + std::to_string(budget) + " fit") {}
};

struct PromptSample {
    std::string utterance;
    std::optional<std::string> context_json;  // rendered sub-sample context
    std::string program_text;
    float score = 0.0f;
};

// Prompt sections in fixed order: system instruction, entity-filtered
// syntax, entity-filtered rules, few-shot samples, input utterance, then
// the current document context iff the analysis requires it.
struct PromptBundle {
    std::string system_instruction;
    std::vector<std::string> syntax_blocks;
    std::vector<std::string> rules;
    std::vector<PromptSample> samples;  // score-descending
    std::string utterance;
    std::optional<std::string> context_json;
    std::size_t estimated_tokens = 0;

    // Byte-stable rendering; what providers receive and --dump-prompt shows.
    std::string render() const;
};

PromptBundle build_prompt(const std::string& utterance, const nlohmann::json* context,
                          const AnalysisResult& analysis,
                          const std::vector<ScoredSample>& samples, const RetrievalConfig& config,
                          const ArmData& data, const TokenEstimator& tokens);

}  // namespace odsl::arm
