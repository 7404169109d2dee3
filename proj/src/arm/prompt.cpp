#include "odsl/arm/prompt.hpp"

namespace odsl::arm {

const HeuristicTokenEstimator& HeuristicTokenEstimator::instance() {
    static const HeuristicTokenEstimator est;
    return est;
}

std::string PromptBundle::render() const {
    std::string out = system_instruction;
    if (!syntax_blocks.empty()) {
        out += "\nHere are examples of ODSL syntax:\n";
        for (const auto& block : syntax_blocks) {
            out += block;
            if (out.back() != '\n') out += '\n';
        }
    }
    if (!rules.empty()) {
        out += "\nGenerate an ODSL program to fulfill the given user utterance. "
               "Remember to follow the following rules when generating ODSL:\n";
        for (const auto& rule : rules) {
            out += "- ";
            out += rule;
            out += '\n';
        }
    }
    for (const auto& sample : samples) {
        out += "\nUser: " + sample.utterance + "\n";
        if (sample.context_json) out += "Context: " + *sample.context_json + "\n";
        out += "Assistant:\n";
        out += sample.program_text;
        if (out.back() != '\n') out += '\n';
    }
    out += "\nUser: " + utterance + "\n";
    if (context_json) out += "Context: " + *context_json + "\n";
    out += "Assistant:";
    return out;
}

PromptBundle build_prompt(const std::string& utterance, const nlohmann::json* context,
                          const AnalysisResult& analysis,
                          const std::vector<ScoredSample>& samples, const RetrievalConfig& config,
                          const ArmData& data, const TokenEstimator& tokens) {
    PromptBundle bundle;
    bundle.system_instruction = data.system_instruction;
    bundle.utterance = utterance;

    for (const auto& [tag, block] : data.syntax_snippets) {
        if (analysis.entities.count(tag) > 0) bundle.syntax_blocks.push_back(block);
    }
    for (const auto& rule : data.rules) {
        if (!rule.tag || analysis.entities.count(*rule.tag) > 0) bundle.rules.push_back(rule.text);
    }

    const bool with_context = analysis.requires_context && context != nullptr;
    if (with_context) bundle.context_json = context->dump();

    for (const auto& s : samples) {
        PromptSample ps;
        ps.utterance = s.record->utterance;
        ps.score = s.score;
        if (with_context) {
            SubSamplePick pick = pick_subsample(*s.record, *context);
            ps.program_text = *pick.program_text;
            if (pick.context != nullptr) ps.context_json = pick.context->dump();
        } else {
            ps.program_text = s.record->program_text;
        }
        bundle.samples.push_back(std::move(ps));
    }

    // Fit the budget by dropping the lowest-score samples.
    const std::size_t budget =
        config.token_budget > config.completion_allowance
            ? static_cast<std::size_t>(config.token_budget - config.completion_allowance)
            : 0;
    bundle.estimated_tokens = tokens.estimate(bundle.render());
    while (bundle.estimated_tokens > budget && !bundle.samples.empty()) {
        bundle.samples.pop_back();
        bundle.estimated_tokens = tokens.estimate(bundle.render());
    }
    if (bundle.estimated_tokens > budget) {
        throw BudgetUnsatisfiable(bundle.estimated_tokens, budget);
    }
    return bundle;
}

}  // namespace odsl::arm
