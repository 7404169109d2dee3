#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "odsl/eval/grade.hpp"
#include "odsl/eval/match.hpp"
#include "odsl/eval/stats.hpp"

namespace odsl::eval {

struct CaseResult {
    std::string id;
    MatchLevel level = MatchLevel::Error;
    std::string detail;  // failure reason, when there is one
};

struct EvalReport {
    std::vector<CaseResult> cases;
    std::array<long, kMatchLevelCount> level_counts{};  // ladder order
    long pass_count = 0;
    long total = 0;
    Interval interval;
    bool strict = false;  // strict mode: subprogram matches do not pass

    static EvalReport from_results(std::vector<CaseResult> results, bool strict);
    // Aggregate-only report from per-level counts (ladder order).
    static EvalReport from_level_counts(const std::array<long, kMatchLevelCount>& counts,
                                        bool strict = false);

    nlohmann::json to_json() const;
    std::string render_table() const;
};

// Produces the graded program for one case; exceptions count as Error.
using CaseGenerator = std::function<GradeInput(const EvalCase&)>;

// Grades every case (optionally across `jobs` workers); per-case failures
// become Error, never abort the suite.
EvalReport run_suite(const EvalSuite& suite, const CaseGenerator& generate,
                     const Registry& registry, bool strict = false, int jobs = 1);

// Generator for offline mode: parse, check and auto-correct the case's
// recorded output; unfixable diagnostics make it an Error.
GradeInput offline_generate(const EvalCase& eval_case, const Registry& registry);

}  // namespace odsl::eval
