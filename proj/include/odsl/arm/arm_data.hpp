#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "odsl/arm/entities.hpp"

namespace odsl::arm {

struct NormalizationTables {
    // Multi-word phrases first (matched longest-first), then single words.
    // Every entry maps a lowercase token sequence to a replacement string.
    std::vector<std::pair<std::vector<std::string>, std::string>> replacements;
};

struct PromptRule {
    std::optional<EntityTag> tag;  // nullopt applies to every prompt
    std::string text;
};

// Data behind the ARM pipeline: utterance normalization tables, the
// rule-based classifier's keyword map, the classifier prompt, and the
// prompt artifacts (system instruction, per-entity syntax blocks, rules).
struct ArmData {
    NormalizationTables normalization;

    std::map<std::string, EntityTagSet> keyword_tags;
    std::vector<std::string> generative_verbs;
    std::string classifier_prompt;  // instruction + few-shots; utterance appended at call time

    std::string system_instruction;
    std::vector<std::pair<EntityTag, std::string>> syntax_snippets;  // declaration order
    std::vector<PromptRule> rules;

    static ArmData from_json_text(std::string_view text);
    static ArmData load_file(const std::string& path);
    static const ArmData& builtin();
};

// Lowercases and standardizes an utterance: intent verbs collapse to "add",
// color words to "color", style/tone phrases to "a given style". Idempotent.
std::string normalize_utterance(const std::string& utterance, const NormalizationTables& tables);

}  // namespace odsl::arm
