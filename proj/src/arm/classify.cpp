#include "odsl/arm/classify.hpp"

#include <sstream>

#include "odsl/support/strings.hpp"

namespace odsl::arm {

namespace {

bool blank(const std::string& s) {
    return strings::trim(s).empty();
}

}  // namespace

AnalysisResult parse_classifier_transcript(const std::string& transcript) {
    std::optional<EntityTagSet> categories;
    std::optional<bool> requires_context;

    std::istringstream in(transcript);
    std::string line;
    while (std::getline(in, line)) {
        const std::string trimmed = strings::trim(line);
        if (trimmed.rfind("Categories:", 0) == 0) {
            EntityTagSet tags;
            std::string rest = trimmed.substr(11);
            std::size_t pos = 0;
            while (pos <= rest.size()) {
                std::size_t comma = rest.find(',', pos);
                std::string word = strings::trim(
                    comma == std::string::npos ? rest.substr(pos) : rest.substr(pos, comma - pos));
                if (!word.empty()) {
                    if (auto tag = tag_from_name(strings::to_lower(word))) tags.insert(*tag);
                }
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            categories = std::move(tags);
        } else if (trimmed.rfind("RequiresContext:", 0) == 0) {
            const std::string word = strings::to_lower(strings::trim(trimmed.substr(16)));
            if (word == "true") requires_context = true;
            if (word == "false") requires_context = false;
        }
    }

    if (!categories.has_value())
        throw ClassifierParseError("classifier transcript has no Categories line");
    if (categories->empty())
        throw ClassifierParseError("classifier committed to no entity category");
    if (!requires_context.has_value())
        throw ClassifierParseError("classifier transcript has no RequiresContext line");

    AnalysisResult result;
    result.entities = std::move(*categories);
    result.requires_context = *requires_context;
    result.transcript = transcript;
    return result;
}

AnalysisResult classify_with_llm(const std::string& utterance, LLMClient& client,
                                 const ArmData& data) {
    if (blank(utterance)) throw EmptyUtterance();
    CompletionRequest request;
    request.prompt = data.classifier_prompt + "\nUser: " + utterance + "\nAssistant:";
    request.max_tokens = 128;
    return parse_classifier_transcript(client.complete(request));
}

AnalysisResult classify_with_rules(const std::string& utterance, const ArmData& data) {
    if (blank(utterance)) throw EmptyUtterance();

    EntityTagSet tags;
    bool generative = false;
    std::ostringstream trace;
    trace << "rules classifier\n";
    for (const std::string& raw : strings::split_ws(strings::to_lower(utterance))) {
        std::string word;
        for (char c : raw) {
            if (std::isalnum(static_cast<unsigned char>(c))) word += c;
        }
        if (word.empty()) continue;
        if (auto it = data.keyword_tags.find(word); it != data.keyword_tags.end()) {
            for (EntityTag t : it->second) {
                if (tags.insert(t).second) trace << "keyword '" << word << "' -> " << tag_name(t) << "\n";
            }
        }
        for (const auto& verb : data.generative_verbs) {
            if (word == verb) generative = true;
        }
    }

    if (tags.empty()) {
        // Explicit "unknown" escape hatch: degrade to plain retrieval over
        // every entity.
        tags = all_tags();
        trace << "no keyword matched; using all tags\n";
    }

    AnalysisResult result;
    result.entities = std::move(tags);
    // Generating new text needs the context to decide where the text goes;
    // everything else (formatting, images about a topic, slides) does not.
    result.requires_context = generative && result.entities.count(EntityTag::Text) > 0;
    trace << "RequiresContext: " << (result.requires_context ? "true" : "false") << "\n";
    result.transcript = trace.str();
    return result;
}

}  // namespace odsl::arm
