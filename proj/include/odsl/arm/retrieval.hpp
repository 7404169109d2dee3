#pragma once

#include <stdexcept>
#include <vector>

#include "odsl/arm/bank.hpp"
#include "odsl/arm/embedding.hpp"
#include "odsl/arm/entities.hpp"

namespace odsl::arm {

class EmptyBankAfterFilter : public std::runtime_error {
public:
    EmptyBankAfterFilter()
        : std::runtime_error("no sample survives the entity filter") {}
};

struct ScoredSample {
    const SampleRecord* record = nullptr;
    std::size_t bank_index = 0;
    float score = 0.0f;
};

// Entity-aware dynamic selection. Keeps the records whose tags are a subset
// of `entities`, scores them against the utterance embedding, takes the
// top-k by score plus a greedy pass that covers every entity the filtered
// bank can cover, dedupes, truncates to max(k, |entities|) and returns the
// result sorted by score (ties broken by bank order everywhere).
// An empty entity set means "unknown" and behaves as the full tag set.
std::vector<ScoredSample> select_samples(const std::string& utterance, const SampleBank& bank,
                                         const EntityTagSet& entities, int k,
                                         const EmbeddingProvider& embedder);

struct SubSamplePick {
    const nlohmann::json* context = nullptr;  // null when the record has none
    const Program* program = nullptr;
    const std::string* program_text = nullptr;
};

// The sub-sample whose context is most similar (Jaccard over identifier
// pairs) to the current context; first declared wins ties. Records without
// sub-samples yield the record's own context and program.
SubSamplePick pick_subsample(const SampleRecord& record, const nlohmann::json& context);

}  // namespace odsl::arm
