#include "odsl/eval/grade.hpp"

#include <algorithm>

#include "odsl/eval/normalize.hpp"
#include "odsl/eval/subprogram.hpp"
#include "odsl/lang/printer.hpp"

namespace odsl::eval {

MatchLevel grade(const EvalCase& eval_case, const GradeInput& generated, const Registry& registry) {
    if (generated.error || !generated.program.has_value()) return MatchLevel::Error;
    const Program& gen = *generated.program;

    for (const auto& acc : eval_case.acceptable) {
        if (acc.strict_equal(gen)) return MatchLevel::Exact;
    }

    const Program gen_norm = normalize_program(gen, registry, /*desensitize=*/true);
    std::vector<Program> acc_norm;
    acc_norm.reserve(eval_case.acceptable.size());
    for (const auto& acc : eval_case.acceptable) {
        acc_norm.push_back(normalize_program(acc, registry, /*desensitize=*/true));
    }

    for (const auto& acc : acc_norm) {
        if (acc.strict_equal(gen_norm)) return MatchLevel::Normalized;
    }
    for (const auto& acc : eval_case.acceptable) {
        if (is_subprogram(acc, gen)) return MatchLevel::SubprogramExact;
    }
    for (const auto& acc : acc_norm) {
        if (is_subprogram(acc, gen_norm)) return MatchLevel::SubprogramNormalized;
    }

    const std::string gen_key = pretty_print(gen_norm, registry);
    for (const auto& verdict : eval_case.manual_valid) {
        // Verdicts are keyed by the normalized generated program; accept
        // either the raw key or a key that normalizes to it.
        if (verdict == gen_key) return MatchLevel::ManualCheckValid;
    }

    return MatchLevel::None;
}

}  // namespace odsl::eval
