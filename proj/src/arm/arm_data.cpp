#include "odsl/arm/arm_data.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "odsl/support/assets.hpp"
#include "odsl/support/strings.hpp"

namespace odsl::arm {

using nlohmann::json;

ArmData ArmData::from_json_text(std::string_view text) {
    json root = json::parse(text);
    ArmData data;

    const json& norm = root.at("normalization");
    auto add_rule = [&](const std::string& from, const std::string& to) {
        data.normalization.replacements.emplace_back(strings::split_ws(strings::to_lower(from)), to);
    };
    const json phrases = norm.value("phrases", json::object());
    for (const auto& [phrase, to] : phrases.items()) {
        add_rule(phrase, to.get<std::string>());
    }
    const std::string color_to = norm.value("colorReplacement", "color");
    for (const auto& c : norm.value("colors", json::array())) {
        add_rule(c.get<std::string>(), color_to);
    }
    const json verbs = norm.value("verbs", json::object());
    for (const auto& [verb, to] : verbs.items()) {
        add_rule(verb, to.get<std::string>());
    }
    // Longest phrases first so "funny style" wins over any single-word rule.
    std::stable_sort(data.normalization.replacements.begin(),
                     data.normalization.replacements.end(),
                     [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });

    const json& classifier = root.at("classifier");
    for (const auto& [tag_str, words] : classifier.at("keywords").items()) {
        auto tag = tag_from_name(tag_str);
        if (!tag) throw std::runtime_error("arm data: unknown entity tag '" + tag_str + "'");
        for (const auto& w : words) data.keyword_tags[strings::to_lower(w.get<std::string>())].insert(*tag);
    }
    for (const auto& v : classifier.value("generativeVerbs", json::array())) {
        data.generative_verbs.push_back(strings::to_lower(v.get<std::string>()));
    }
    data.classifier_prompt = classifier.at("prompt").get<std::string>();

    const json& prompt = root.at("prompt");
    data.system_instruction = prompt.at("systemInstruction").get<std::string>();
    for (const auto& [tag_str, block] : prompt.at("syntax").items()) {
        auto tag = tag_from_name(tag_str);
        if (!tag) throw std::runtime_error("arm data: unknown entity tag '" + tag_str + "'");
        data.syntax_snippets.emplace_back(*tag, block.get<std::string>());
    }
    std::stable_sort(data.syntax_snippets.begin(), data.syntax_snippets.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& r : prompt.at("rules")) {
        PromptRule rule;
        if (r.contains("tag") && !r.at("tag").is_null()) {
            auto tag = tag_from_name(r.at("tag").get<std::string>());
            if (!tag) throw std::runtime_error("arm data: unknown rule tag");
            rule.tag = *tag;
        }
        rule.text = r.at("text").get<std::string>();
        data.rules.push_back(std::move(rule));
    }

    return data;
}

ArmData ArmData::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("arm data: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

const ArmData& ArmData::builtin() {
    static const ArmData data = from_json_text(assets::arm_defaults());
    return data;
}

namespace {

struct Token {
    std::string prefix;  // leading punctuation
    std::string core;    // lowercase word
    std::string suffix;  // trailing punctuation
};

std::vector<Token> tokenize(const std::string& lowered) {
    std::vector<Token> out;
    for (const std::string& raw : strings::split_ws(lowered)) {
        Token t;
        std::size_t b = 0;
        std::size_t e = raw.size();
        while (b < e && !std::isalnum(static_cast<unsigned char>(raw[b]))) ++b;
        while (e > b && !std::isalnum(static_cast<unsigned char>(raw[e - 1]))) --e;
        t.prefix = raw.substr(0, b);
        t.core = raw.substr(b, e - b);
        t.suffix = raw.substr(e);
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

std::string normalize_utterance(const std::string& utterance, const NormalizationTables& tables) {
    const std::string lowered = strings::to_lower(utterance);
    const std::vector<Token> tokens = tokenize(lowered);

    std::vector<std::string> words;
    std::size_t i = 0;
    while (i < tokens.size()) {
        const auto* hit = static_cast<const std::pair<std::vector<std::string>, std::string>*>(nullptr);
        for (const auto& rule : tables.replacements) {
            const auto& from = rule.first;
            if (from.empty() || i + from.size() > tokens.size()) continue;
            bool match = true;
            for (std::size_t j = 0; j < from.size(); ++j) {
                if (tokens[i + j].core != from[j]) {
                    match = false;
                    break;
                }
            }
            if (match) {
                hit = &rule;
                break;
            }
        }
        if (hit != nullptr) {
            const std::size_t span = hit->first.size();
            const std::string replaced = tokens[i].prefix + hit->second + tokens[i + span - 1].suffix;
            for (const std::string& w : strings::split_ws(replaced)) words.push_back(w);
            i += span;
        } else {
            words.push_back(tokens[i].prefix + tokens[i].core + tokens[i].suffix);
            ++i;
        }
    }

    std::string out;
    for (const auto& w : words) {
        if (!out.empty()) out += ' ';
        out += w;
    }
    return out;
}

}  // namespace odsl::arm
