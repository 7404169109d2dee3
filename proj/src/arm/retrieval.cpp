#include "odsl/arm/retrieval.hpp"

#include <algorithm>

#include "odsl/doc/context.hpp"

namespace odsl::arm {

namespace {

bool subset(const EntityTagSet& inner, const EntityTagSet& outer) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

// Score-descending, bank-order on ties; a total, deterministic order.
bool ranks_before(const ScoredSample& a, const ScoredSample& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.bank_index < b.bank_index;
}

}  // namespace

std::vector<ScoredSample> select_samples(const std::string& utterance, const SampleBank& bank,
                                         const EntityTagSet& entities, int k,
                                         const EmbeddingProvider& embedder) {
    const EntityTagSet& target = entities.empty() ? all_tags() : entities;

    std::vector<ScoredSample> sorted;
    const std::vector<float> query = embedder.embed(utterance);
    for (std::size_t i = 0; i < bank.records().size(); ++i) {
        const SampleRecord& rec = bank.records()[i];
        if (!subset(rec.tags, target)) continue;
        ScoredSample s;
        s.record = &rec;
        s.bank_index = i;
        s.score = rec.embedding.empty() ? cosine(query, embedder.embed(rec.normalized))
                                        : cosine(query, rec.embedding);
        sorted.push_back(s);
    }
    if (sorted.empty()) throw EmptyBankAfterFilter();
    std::sort(sorted.begin(), sorted.end(), ranks_before);

    const std::size_t want_k = k < 0 ? 0 : static_cast<std::size_t>(k);
    std::vector<ScoredSample> alpha(sorted.begin(),
                                    sorted.begin() + std::min(want_k, sorted.size()));

    // Greedy entity cover over the score-ordered list. One pass covers every
    // entity that any filtered record carries.
    std::vector<ScoredSample> beta;
    EntityTagSet covered;
    EntityTagSet coverable;
    for (const auto& s : sorted) coverable.insert(s.record->tags.begin(), s.record->tags.end());
    for (const auto& s : sorted) {
        if (covered == coverable) break;
        if (!subset(s.record->tags, covered)) {
            beta.push_back(s);
            covered.insert(s.record->tags.begin(), s.record->tags.end());
        }
    }

    std::vector<ScoredSample> result;
    auto push_unique = [&](const ScoredSample& s) {
        for (const auto& existing : result) {
            if (existing.bank_index == s.bank_index) return;
        }
        result.push_back(s);
    };
    for (const auto& s : beta) push_unique(s);
    for (const auto& s : alpha) push_unique(s);

    const std::size_t cap = std::max(want_k, target.size());
    if (result.size() > cap) result.resize(cap);
    std::sort(result.begin(), result.end(), ranks_before);
    return result;
}

SubSamplePick pick_subsample(const SampleRecord& record, const nlohmann::json& context) {
    if (record.sub_samples.empty()) {
        return {record.context ? &*record.context : nullptr, &record.program,
                &record.program_text};
    }
    const SubSample* best = nullptr;
    double best_score = -1.0;
    for (const auto& sub : record.sub_samples) {
        const double score = doc::context_similarity(sub.context, context);
        if (score > best_score) {  // strict: ties keep the first declared
            best = &sub;
            best_score = score;
        }
    }
    return {&best->context, &best->program, &best->program_text};
}

}  // namespace odsl::arm
