#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "odsl/arm/arm_data.hpp"
#include "odsl/arm/embedding.hpp"
#include "odsl/arm/entities.hpp"
#include "odsl/lang/ast.hpp"
#include "odsl/lang/registry.hpp"

namespace odsl::arm {

// Alternative implementation of the same utterance for a specific document
// context.
struct SubSample {
    nlohmann::json context;
    std::string program_text;
    Program program;
};

struct SampleRecord {
    std::string id;
    std::string utterance;
    std::string normalized;  // normalized utterance the embedding is taken over
    EntityTagSet tags;
    std::string program_text;
    Program program;
    std::optional<nlohmann::json> context;
    std::vector<SubSample> sub_samples;  // pairwise-distinct contexts
    std::vector<float> embedding;        // unit length; empty until indexed
};

class SampleBank {
public:
    // Loads and validates records: programs must parse, sub-sample contexts
    // must be pairwise distinct, stored embeddings must be unit length.
    // Normalized utterances are computed when the file does not carry them.
    static SampleBank load_file(const std::string& path, const Registry& registry,
                                const NormalizationTables& tables);
    static SampleBank from_json(const nlohmann::json& j, const Registry& registry,
                                const NormalizationTables& tables);

    // Computes any missing embeddings (the `bank index` subcommand persists
    // the result).
    void ensure_embeddings(const EmbeddingProvider& embedder);

    nlohmann::json to_json() const;
    void save_file(const std::string& path) const;

    const std::vector<SampleRecord>& records() const { return records_; }
    std::vector<SampleRecord>& records() { return records_; }
    bool empty() const { return records_.empty(); }

private:
    std::vector<SampleRecord> records_;
};

}  // namespace odsl::arm
