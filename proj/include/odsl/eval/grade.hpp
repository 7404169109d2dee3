#pragma once

#include <optional>

#include "odsl/eval/match.hpp"
#include "odsl/lang/registry.hpp"

namespace odsl::eval {

// What generation produced for a case: a program, or a failure (no output,
// parse failure, unfixable diagnostics, timeout).
struct GradeInput {
    std::optional<Program> program;
    bool error = false;
};

MatchLevel grade(const EvalCase& eval_case, const GradeInput& generated, const Registry& registry);

}  // namespace odsl::eval
