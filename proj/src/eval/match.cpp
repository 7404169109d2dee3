#include "odsl/eval/match.hpp"

#include <fstream>
#include <stdexcept>

#include "odsl/analysis/checker.hpp"
#include "odsl/lang/parser.hpp"

namespace odsl::eval {

using nlohmann::json;

std::string_view match_level_name(MatchLevel level) {
    switch (level) {
        case MatchLevel::Exact: return "Exact";
        case MatchLevel::Normalized: return "Normalized";
        case MatchLevel::SubprogramExact: return "SubprogramExact";
        case MatchLevel::SubprogramNormalized: return "SubprogramNormalized";
        case MatchLevel::ManualCheckValid: return "ManualCheckValid";
        case MatchLevel::None: return "None";
        case MatchLevel::Error: return "Error";
    }
    return "Error";
}

std::optional<MatchLevel> match_level_from_name(std::string_view name) {
    for (int i = 0; i < kMatchLevelCount; ++i) {
        const auto level = static_cast<MatchLevel>(i);
        if (match_level_name(level) == name) return level;
    }
    return std::nullopt;
}

EvalSuite EvalSuite::from_json(const json& root, const Registry& registry) {
    EvalSuite suite;
    for (const auto& cj : root.at("cases")) {
        EvalCase c;
        c.id = cj.at("id").get<std::string>();
        c.utterance = cj.at("utterance").get<std::string>();
        if (cj.contains("context")) c.context = cj.at("context");
        for (const auto& a : cj.at("acceptable")) {
            const std::string text = a.get<std::string>();
            Program p = parse(text);
            auto checked = analysis::check(p, registry);
            if (!checked.ok())
                throw std::runtime_error("suite: case '" + c.id +
                                         "' has an acceptable program that fails validation");
            c.acceptable_texts.push_back(text);
            c.acceptable.push_back(std::move(p));
        }
        if (c.acceptable.empty())
            throw std::runtime_error("suite: case '" + c.id + "' needs at least one acceptable program");
        if (cj.contains("output")) {
            if (cj.at("output").is_null()) {
                c.output_error = true;
            } else {
                c.output_text = cj.at("output").get<std::string>();
            }
        }
        if (cj.value("outputError", false)) c.output_error = true;
        for (const auto& m : cj.value("manualValid", json::array())) {
            c.manual_valid.push_back(m.get<std::string>());
        }
        suite.cases.push_back(std::move(c));
    }
    return suite;
}

EvalSuite EvalSuite::load_file(const std::string& path, const Registry& registry) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("suite: cannot open " + path);
    return from_json(json::parse(in), registry);
}

}  // namespace odsl::eval
