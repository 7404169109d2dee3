#include "odsl/arm/synthesize.hpp"

#include "odsl/arm/classify.hpp"
#include "odsl/arm/retrieval.hpp"
#include "odsl/lang/parser.hpp"

namespace odsl::arm {

SynthesisOutcome synthesize(const std::string& utterance, const nlohmann::json* context,
                            const SampleBank& bank, const RetrievalConfig& config,
                            LLMClient& llm, const EmbeddingProvider& embedder,
                            const ArmData& data, const Registry& registry,
                            const TokenEstimator& tokens) {
    SynthesisOutcome outcome;
    try {
        outcome.analysis = config.classifier == "rules"
                               ? classify_with_rules(utterance, data)
                               : classify_with_llm(utterance, llm, data);

        const std::vector<ScoredSample> samples =
            select_samples(utterance, bank, outcome.analysis.entities, config.k, embedder);

        outcome.prompt =
            build_prompt(utterance, context, outcome.analysis, samples, config, data, tokens);

        CompletionRequest request;
        request.prompt = outcome.prompt.render();
        request.temperature = config.temperature;
        request.top_p = config.top_p;
        request.max_tokens = config.completion_allowance;
        outcome.raw_completion = llm.complete(request);
    } catch (const ProviderError& e) {
        throw SynthesisError(std::string("provider failure: ") + e.what(), true);
    } catch (const ClassifierParseError& e) {
        throw SynthesisError(std::string("classifier failure: ") + e.what());
    } catch (const EmptyBankAfterFilter& e) {
        throw SynthesisError(e.what());
    } catch (const BudgetUnsatisfiable& e) {
        throw SynthesisError(e.what());
    }

    Program generated;
    try {
        generated = parse(outcome.raw_completion);
    } catch (const ParseError& e) {
        throw SynthesisError(std::string("generated program does not parse: ") + e.what());
    }

    auto checked = analysis::check(generated, registry);
    outcome.fix_report = autofix::fix(generated, checked.diagnostics, registry);
    outcome.program = outcome.fix_report.program;
    return outcome;
}

}  // namespace odsl::arm
