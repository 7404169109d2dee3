#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "odsl/arm/arm_data.hpp"
#include "odsl/arm/entities.hpp"
#include "odsl/arm/providers.hpp"

namespace odsl::arm {

struct AnalysisResult {
    EntityTagSet entities;      // never empty on success
    bool requires_context = false;
    std::string transcript;    // raw classifier output, kept for audit
};

class EmptyUtterance : public std::runtime_error {
public:
    EmptyUtterance() : std::runtime_error("utterance is empty") {}
};

class ClassifierParseError : public std::runtime_error {
public:
    explicit ClassifierParseError(const std::string& what) : std::runtime_error(what) {}
};

// One LLM call performs both tasks; the transcript must contain a
// `Categories:` line and a `RequiresContext:` line.
AnalysisResult classify_with_llm(const std::string& utterance, LLMClient& client,
                                 const ArmData& data);

// Keyword-table fallback. An utterance matching no keyword classifies as
// every tag (plain retrieval); a generative verb aimed at text content
// means the document context is needed to place it.
AnalysisResult classify_with_rules(const std::string& utterance, const ArmData& data);

// Parses a classifier transcript (exposed for tests and canned transcripts).
AnalysisResult parse_classifier_transcript(const std::string& transcript);

}  // namespace odsl::arm
