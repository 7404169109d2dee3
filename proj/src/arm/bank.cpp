#include "odsl/arm/bank.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "odsl/lang/parser.hpp"

namespace odsl::arm {

using nlohmann::json;

namespace {

void validate_embedding(const SampleRecord& rec) {
    if (rec.embedding.empty()) return;
    const double norm = l2_norm(rec.embedding);
    if (std::abs(norm - 1.0) > 1e-6)
        throw std::runtime_error("bank: record '" + rec.id + "' embedding is not unit length");
}

}  // namespace

SampleBank SampleBank::from_json(const json& root, const Registry& registry,
                                 const NormalizationTables& tables) {
    SampleBank bank;
    for (const auto& rj : root.at("samples")) {
        SampleRecord rec;
        rec.id = rj.at("id").get<std::string>();
        rec.utterance = rj.at("utterance").get<std::string>();
        rec.normalized = rj.contains("normalizedUtterance")
                             ? rj.at("normalizedUtterance").get<std::string>()
                             : normalize_utterance(rec.utterance, tables);
        for (const auto& t : rj.at("entities")) {
            auto tag = tag_from_name(t.get<std::string>());
            if (!tag) throw std::runtime_error("bank: record '" + rec.id + "' has unknown tag");
            rec.tags.insert(*tag);
        }
        rec.program_text = rj.at("program").get<std::string>();
        rec.program = parse(rec.program_text);
        for (const auto& stmt : rec.program.statements) {
            if (registry.lookup(stmt.name) == nullptr)
                throw std::runtime_error("bank: record '" + rec.id + "' uses unknown statement '" +
                                         stmt.name + "'");
        }
        if (rj.contains("context")) rec.context = rj.at("context");
        for (const auto& sj : rj.value("subSamples", json::array())) {
            SubSample sub;
            sub.context = sj.at("context");
            sub.program_text = sj.at("program").get<std::string>();
            sub.program = parse(sub.program_text);
            for (const auto& existing : rec.sub_samples) {
                if (existing.context == sub.context)
                    throw std::runtime_error("bank: record '" + rec.id +
                                             "' has duplicate sub-sample contexts");
            }
            rec.sub_samples.push_back(std::move(sub));
        }
        if (rj.contains("embedding"))
            rec.embedding = rj.at("embedding").get<std::vector<float>>();
        validate_embedding(rec);
        bank.records_.push_back(std::move(rec));
    }
    return bank;
}

SampleBank SampleBank::load_file(const std::string& path, const Registry& registry,
                                 const NormalizationTables& tables) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("bank: cannot open " + path);
    return from_json(json::parse(in), registry, tables);
}

void SampleBank::ensure_embeddings(const EmbeddingProvider& embedder) {
    for (auto& rec : records_) {
        if (rec.embedding.empty()) rec.embedding = embedder.embed(rec.normalized);
        validate_embedding(rec);
    }
}

json SampleBank::to_json() const {
    json samples = json::array();
    for (const auto& rec : records_) {
        json rj{{"id", rec.id},
                {"utterance", rec.utterance},
                {"normalizedUtterance", rec.normalized},
                {"program", rec.program_text}};
        json tags = json::array();
        for (EntityTag t : rec.tags) tags.push_back(std::string(tag_name(t)));
        rj["entities"] = std::move(tags);
        if (rec.context) rj["context"] = *rec.context;
        if (!rec.sub_samples.empty()) {
            json subs = json::array();
            for (const auto& s : rec.sub_samples) {
                subs.push_back(json{{"context", s.context}, {"program", s.program_text}});
            }
            rj["subSamples"] = std::move(subs);
        }
        if (!rec.embedding.empty()) rj["embedding"] = rec.embedding;
        samples.push_back(std::move(rj));
    }
    return json{{"formatVersion", 1}, {"samples", std::move(samples)}};
}

void SampleBank::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("bank: cannot write " + path);
    out << to_json().dump(2) << '\n';
}

}  // namespace odsl::arm
