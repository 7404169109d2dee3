#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "odsl/lang/ast.hpp"
#include "odsl/lang/registry.hpp"

namespace odsl::eval {

// Grading ladder, strongest first. A case gets the highest level that
// applies.
enum class MatchLevel {
    Exact,
    Normalized,
    SubprogramExact,
    SubprogramNormalized,
    ManualCheckValid,
    None,
    Error,
};

inline constexpr int kMatchLevelCount = 7;

std::string_view match_level_name(MatchLevel level);
std::optional<MatchLevel> match_level_from_name(std::string_view name);

struct EvalCase {
    std::string id;
    std::string utterance;
    std::optional<nlohmann::json> context;
    std::vector<std::string> acceptable_texts;
    std::vector<Program> acceptable;  // all check clean
    // Offline grading: the pre-generated output, or a recorded failure.
    std::optional<std::string> output_text;
    bool output_error = false;
    // Recorded human verdicts, keyed by the normalized generated program.
    std::vector<std::string> manual_valid;
};

struct EvalSuite {
    std::vector<EvalCase> cases;

    static EvalSuite from_json(const nlohmann::json& j, const Registry& registry);
    static EvalSuite load_file(const std::string& path, const Registry& registry);
};

}  // namespace odsl::eval
