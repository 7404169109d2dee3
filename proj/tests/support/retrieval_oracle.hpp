#pragma once

// Brute-force reference for entity-aware dynamic selection, written against
// the selection semantics directly (explicit filter, cover, dedupe,
// truncate, re-sort steps over index lists). select_samples must agree with
// this on membership, cardinality, coverage and ordering.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "odsl/arm/bank.hpp"
#include "odsl/arm/embedding.hpp"
#include "odsl/arm/entities.hpp"
#include "odsl/arm/vec_ops.hpp"

namespace testutil {

using odsl::arm::EntityTagSet;
using odsl::arm::SampleBank;

inline std::vector<std::size_t> oracle_select(const std::string& utterance,
                                              const SampleBank& bank, const EntityTagSet& em,
                                              int k,
                                              const odsl::arm::EmbeddingProvider& embedder) {
    const EntityTagSet universe = em.empty() ? odsl::arm::all_tags() : em;

    struct Row {
        std::size_t index;
        float score;
    };

    const auto query = embedder.embed(utterance);
    std::vector<Row> filtered;
    for (std::size_t i = 0; i < bank.records().size(); ++i) {
        const auto& rec = bank.records()[i];
        bool inside = true;
        for (auto tag : rec.tags) {
            if (universe.count(tag) == 0) inside = false;
        }
        if (!inside) continue;
        const auto& emb = rec.embedding.empty() ? embedder.embed(rec.normalized) : rec.embedding;
        filtered.push_back(Row{i, odsl::arm::vecops::dot(query.data(), emb.data(), query.size())});
    }

    std::sort(filtered.begin(), filtered.end(), [](const Row& a, const Row& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.index < b.index;
    });

    const std::size_t kk = k < 0 ? 0 : static_cast<std::size_t>(k);
    std::vector<Row> alpha;
    for (std::size_t i = 0; i < filtered.size() && i < kk; ++i) alpha.push_back(filtered[i]);

    EntityTagSet coverable;
    for (const auto& row : filtered) {
        for (auto tag : bank.records()[row.index].tags) coverable.insert(tag);
    }
    std::vector<Row> beta;
    EntityTagSet covered;
    for (const auto& row : filtered) {
        if (covered == coverable) break;
        bool adds = false;
        for (auto tag : bank.records()[row.index].tags) {
            if (covered.count(tag) == 0) adds = true;
        }
        if (adds) {
            beta.push_back(row);
            for (auto tag : bank.records()[row.index].tags) covered.insert(tag);
        }
    }

    std::vector<Row> merged;
    for (const auto& row : beta) merged.push_back(row);
    for (const auto& row : alpha) {
        bool dup = false;
        for (const auto& existing : merged) {
            if (existing.index == row.index) dup = true;
        }
        if (!dup) merged.push_back(row);
    }

    const std::size_t cap = std::max(kk, universe.size());
    if (merged.size() > cap) merged.resize(cap);

    std::sort(merged.begin(), merged.end(), [](const Row& a, const Row& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.index < b.index;
    });

    std::vector<std::size_t> out;
    for (const auto& row : merged) out.push_back(row.index);
    return out;
}

}  // namespace testutil
