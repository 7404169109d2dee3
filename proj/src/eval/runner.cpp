#include "odsl/eval/runner.hpp"

#include <future>
#include <sstream>

#include "odsl/analysis/checker.hpp"
#include "odsl/fix/fixer.hpp"
#include "odsl/lang/parser.hpp"

namespace odsl::eval {

using nlohmann::json;

namespace {

bool counts_as_pass(MatchLevel level, bool strict) {
    switch (level) {
        case MatchLevel::Exact:
        case MatchLevel::Normalized:
        case MatchLevel::ManualCheckValid:
            return true;
        case MatchLevel::SubprogramExact:
        case MatchLevel::SubprogramNormalized:
            return !strict;
        case MatchLevel::None:
        case MatchLevel::Error:
            return false;
    }
    return false;
}

CaseResult grade_one(const EvalCase& c, const CaseGenerator& generate, const Registry& registry) {
    CaseResult result;
    result.id = c.id;
    try {
        const GradeInput input = generate(c);
        result.level = grade(c, input, registry);
    } catch (const std::exception& e) {
        result.level = MatchLevel::Error;
        result.detail = e.what();
    }
    return result;
}

}  // namespace

EvalReport EvalReport::from_results(std::vector<CaseResult> results, bool strict) {
    EvalReport report;
    report.cases = std::move(results);
    report.strict = strict;
    report.total = static_cast<long>(report.cases.size());
    for (const auto& r : report.cases) {
        ++report.level_counts[static_cast<std::size_t>(r.level)];
        if (counts_as_pass(r.level, strict)) ++report.pass_count;
    }
    if (report.total > 0) report.interval = agresti_coull(report.pass_count, report.total);
    return report;
}

EvalReport EvalReport::from_level_counts(const std::array<long, kMatchLevelCount>& counts,
                                         bool strict) {
    EvalReport report;
    report.strict = strict;
    report.level_counts = counts;
    for (int i = 0; i < kMatchLevelCount; ++i) {
        report.total += counts[static_cast<std::size_t>(i)];
        if (counts_as_pass(static_cast<MatchLevel>(i), strict))
            report.pass_count += counts[static_cast<std::size_t>(i)];
    }
    if (report.total > 0) report.interval = agresti_coull(report.pass_count, report.total);
    return report;
}

json EvalReport::to_json() const {
    json counts = json::object();
    for (int i = 0; i < kMatchLevelCount; ++i) {
        counts[std::string(match_level_name(static_cast<MatchLevel>(i)))] =
            level_counts[static_cast<std::size_t>(i)];
    }
    json cases_json = json::array();
    for (const auto& r : cases) {
        json cj{{"id", r.id}, {"level", std::string(match_level_name(r.level))}};
        if (!r.detail.empty()) cj["detail"] = r.detail;
        cases_json.push_back(std::move(cj));
    }
    return json{{"cases", std::move(cases_json)},
                {"levelCounts", std::move(counts)},
                {"pass", pass_count},
                {"total", total},
                {"passRate", {{"center", interval.center}, {"halfwidth", interval.halfwidth}}},
                {"strict", strict}};
}

std::string EvalReport::render_table() const {
    std::ostringstream out;
    for (int i = 0; i < kMatchLevelCount; ++i) {
        out << match_level_name(static_cast<MatchLevel>(i)) << "  ";
    }
    out << "PassRate(%)\n";
    for (int i = 0; i < kMatchLevelCount; ++i) {
        const auto name = match_level_name(static_cast<MatchLevel>(i));
        std::string cell = std::to_string(level_counts[static_cast<std::size_t>(i)]);
        out << std::string(name.size() > cell.size() ? name.size() - cell.size() : 0, ' ') << cell
            << "  ";
    }
    char rate[64];
    std::snprintf(rate, sizeof(rate), "%.2f +- %.2f", interval.center, interval.halfwidth);
    out << rate << "\n";
    return out.str();
}

EvalReport run_suite(const EvalSuite& suite, const CaseGenerator& generate,
                     const Registry& registry, bool strict, int jobs) {
    std::vector<CaseResult> results(suite.cases.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < suite.cases.size(); ++i) {
            results[i] = grade_one(suite.cases[i], generate, registry);
        }
    } else {
        std::vector<std::future<void>> workers;
        std::atomic<std::size_t> next{0};
        for (int w = 0; w < jobs; ++w) {
            workers.push_back(std::async(std::launch::async, [&] {
                for (std::size_t i = next.fetch_add(1); i < suite.cases.size();
                     i = next.fetch_add(1)) {
                    results[i] = grade_one(suite.cases[i], generate, registry);
                }
            }));
        }
        for (auto& w : workers) w.get();
    }
    return EvalReport::from_results(std::move(results), strict);
}

GradeInput offline_generate(const EvalCase& eval_case, const Registry& registry) {
    if (eval_case.output_error || !eval_case.output_text.has_value()) return GradeInput{{}, true};
    GradeInput input;
    try {
        Program p = parse(*eval_case.output_text);
        auto checked = analysis::check(p, registry);
        auto fixed = autofix::fix(p, checked.diagnostics, registry);
        if (!fixed.residual.empty()) return GradeInput{{}, true};
        input.program = std::move(fixed.program);
    } catch (const ParseError&) {
        input.error = true;
    }
    return input;
}

}  // namespace odsl::eval
