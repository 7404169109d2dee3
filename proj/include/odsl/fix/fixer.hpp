#pragma once

#include <optional>
#include <string>
#include <vector>

#include "odsl/analysis/checker.hpp"
#include "odsl/lang/ast.hpp"
#include "odsl/lang/registry.hpp"

namespace odsl::autofix {

enum class RepairKind { FuzzyEnum, StatementAlias, StatementInjection, ArgumentClamp };

std::string_view repair_kind_name(RepairKind kind);

struct RepairEntry {
    RepairKind kind;
    Span span;
    std::string before;  // pretty-printed statement before the rewrite
    std::string after;   // after (injections include the appended statements)
};

struct FixReport {
    Program program;  // corrected program
    std::vector<RepairEntry> repairs;
    std::vector<analysis::Diagnostic> residual;  // still-unfixable diagnostics

    nlohmann::json to_json(const Registry& registry) const;
};

// min(max(value, lo), hi)
double clamp_value(double value, double lo, double hi);

// Case-insensitive, whitespace-stripped Levenshtein match of `bad` against
// the allowed spellings. Returns the closest candidate iff its distance is
// at most ceil(len * numerator / denominator) of the normalized input; ties
// break to the lexicographically smallest candidate.
std::optional<std::string> fuzzy_match(const std::string& bad,
                                       const std::vector<std::string>& allowed,
                                       int numerator = 1, int denominator = 3);

// Applies the four repair strategies (statement aliasing, fuzzy enum
// matching, statement injection, argument clamping) to the statements the
// diagnostics point at, then revalidates; at most three passes. Statements
// without diagnostics are never touched.
FixReport fix(const Program& program, const std::vector<analysis::Diagnostic>& diagnostics,
              const Registry& registry);

}  // namespace odsl::autofix
