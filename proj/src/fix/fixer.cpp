#include "odsl/fix/fixer.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "odsl/lang/printer.hpp"
#include "odsl/support/strings.hpp"

namespace odsl::autofix {
namespace {

using analysis::DiagCode;
using analysis::Diagnostic;

std::string canon_for_fuzzy(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

std::string identifier_from(std::string_view text) {
    std::string out;
    for (char c : text) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        } else if (!out.empty() && out.back() != '_') {
            out += '_';
        }
    }
    while (!out.empty() && out.back() == '_') out.pop_back();
    if (out.empty()) out = "entity";
    if (std::isdigit(static_cast<unsigned char>(out.front()))) out.insert(out.begin(), '_');
    return out;
}

class FixSession {
public:
    FixSession(Program program, const Registry& registry)
        : program_(std::move(program)), registry_(registry) {}

    FixReport run(const std::vector<Diagnostic>& initial) {
        std::vector<Diagnostic> diags = initial;
        for (int pass = 0; pass < 3 && !diags.empty(); ++pass) {
            const std::size_t before_count = diags.size();
            const bool changed = apply_pass(diags);
            diags = analysis::check(program_, registry_).diagnostics;
            if (!changed) break;
            if (diags.size() >= before_count) break;  // no progress
        }
        FixReport report;
        report.program = std::move(program_);
        report.repairs = std::move(repairs_);
        report.residual = std::move(diags);
        return report;
    }

private:
    // Applies one rewriting pass. Statements are processed from the last to
    // the first so injections do not shift not-yet-visited indices.
    bool apply_pass(const std::vector<Diagnostic>& diags) {
        std::map<std::size_t, std::vector<const Diagnostic*>> by_stmt;
        for (const auto& d : diags) {
            if (!d.payload.contains("stmtIndex")) continue;
            by_stmt[d.payload.at("stmtIndex").get<std::size_t>()].push_back(&d);
        }

        bool changed = false;
        for (auto it = by_stmt.rbegin(); it != by_stmt.rend(); ++it) {
            changed |= repair_statement(it->first, it->second);
        }
        return changed;
    }

    bool repair_statement(std::size_t index, const std::vector<const Diagnostic*>& diags) {
        if (index >= program_.statements.size()) return false;
        bool changed = false;
        // Rule order: aliasing resolves the statement name first, fuzzy
        // matching and injections repair enum values, clamping last.
        for (const Diagnostic* d : diags) {
            if (d->code == DiagCode::UnknownStatement) changed |= apply_alias(index, *d);
        }
        for (const Diagnostic* d : diags) {
            if (d->code == DiagCode::EnumValueInvalid) changed |= apply_enum_repair(index, *d);
        }
        for (const Diagnostic* d : diags) {
            if (d->code == DiagCode::RangeViolation) changed |= apply_clamp(index, *d);
        }
        return changed;
    }

    bool apply_alias(std::size_t index, const Diagnostic& diag) {
        Statement& stmt = program_.statements[index];
        auto alias = registry_.aliases().find(stmt.name);
        if (alias == registry_.aliases().end()) return false;
        if (registry_.lookup(alias->second) == nullptr) return false;

        const std::string before = print_statement(stmt, registry_);
        stmt.name = alias->second;
        record(RepairKind::StatementAlias, diag.span, before, print_statement(stmt, registry_));
        return true;
    }

    bool apply_enum_repair(std::size_t index, const Diagnostic& diag) {
        Statement& stmt = program_.statements[index];
        const std::string param = diag.payload.value("param", "");
        const std::string bad = diag.payload.value("value", "");
        auto arg = std::find_if(stmt.args.begin(), stmt.args.end(),
                                [&](const Argument& a) { return a.name == param; });
        if (arg == stmt.args.end() || arg->value.kind != Value::Kind::String ||
            arg->value.text != bad) {
            return false;
        }
        std::vector<std::string> allowed;
        if (diag.payload.contains("allowed"))
            allowed = diag.payload.at("allowed").get<std::vector<std::string>>();

        if (auto match = fuzzy_match(bad, allowed, registry_.fuzzy_numerator(),
                                     registry_.fuzzy_denominator());
            match.has_value() && *match != bad) {
            const std::string before = print_statement(stmt, registry_);
            arg->value.text = *match;
            record(RepairKind::FuzzyEnum, diag.span, before, print_statement(stmt, registry_));
            return true;
        }

        if (const InjectionRule* rule = registry_.injection_for(stmt.name, param, bad)) {
            return apply_injection(index, diag, *rule);
        }
        return false;
    }

    bool apply_injection(std::size_t index, const Diagnostic& diag, const InjectionRule& rule) {
        Statement& stmt = program_.statements[index];
        auto arg = std::find_if(stmt.args.begin(), stmt.args.end(),
                                [&](const Argument& a) { return a.name == rule.param; });
        if (arg == stmt.args.end()) return false;

        const std::string before = print_statement(stmt, registry_);
        arg->value.text = rule.replace_with;

        if (!stmt.binding) stmt.binding = fresh_binding(identifier_from(rule.value));
        const std::string binding = *stmt.binding;

        std::vector<Statement> appended;
        for (const auto& tmpl : rule.append) {
            Statement extra;
            extra.name = tmpl.name;
            extra.span = Span{0, 0};  // synthetic
            for (const auto& [name, value] : tmpl.args) {
                Argument a;
                a.name = name;
                a.value = (value.kind == Value::Kind::VarRef && value.text == "$binding")
                              ? Value::var(binding)
                              : value;
                a.span = extra.span;
                extra.args.push_back(std::move(a));
            }
            appended.push_back(std::move(extra));
        }

        std::string after = print_statement(stmt, registry_);
        auto insert_at = program_.statements.begin() + static_cast<std::ptrdiff_t>(index) + 1;
        for (auto& extra : appended) {
            after += '\n';
            after += print_statement(extra, registry_);
            insert_at = std::next(program_.statements.insert(insert_at, std::move(extra)));
        }

        record(RepairKind::StatementInjection, diag.span, before, after);
        return true;
    }

    bool apply_clamp(std::size_t index, const Diagnostic& diag) {
        Statement& stmt = program_.statements[index];
        const std::string param = diag.payload.value("param", "");
        auto arg = std::find_if(stmt.args.begin(), stmt.args.end(),
                                [&](const Argument& a) { return a.name == param; });
        if (arg == stmt.args.end() || arg->value.kind != Value::Kind::Number) return false;
        const double lo = diag.payload.value("lo", 0.0);
        const double hi = diag.payload.value("hi", 0.0);
        const double clamped = clamp_value(arg->value.number, lo, hi);
        if (clamped == arg->value.number) return false;

        const std::string before = print_statement(stmt, registry_);
        arg->value.number = clamped;
        record(RepairKind::ArgumentClamp, diag.span, before, print_statement(stmt, registry_));
        return true;
    }

    std::string fresh_binding(std::string base) {
        std::set<std::string> taken;
        for (const auto& s : program_.statements) {
            if (s.binding) taken.insert(*s.binding);
            for (const auto& a : s.args) {
                if (a.value.kind == Value::Kind::VarRef) taken.insert(a.value.text);
            }
        }
        if (taken.count(base) == 0) return base;
        for (int n = 2;; ++n) {
            std::string candidate = base + std::to_string(n);
            if (taken.count(candidate) == 0) return candidate;
        }
    }

    void record(RepairKind kind, Span span, std::string before, std::string after) {
        repairs_.push_back(RepairEntry{kind, span, std::move(before), std::move(after)});
    }

    Program program_;
    const Registry& registry_;
    std::vector<RepairEntry> repairs_;
};

}  // namespace

std::string_view repair_kind_name(RepairKind kind) {
    switch (kind) {
        case RepairKind::FuzzyEnum: return "FuzzyEnum";
        case RepairKind::StatementAlias: return "StatementAlias";
        case RepairKind::StatementInjection: return "StatementInjection";
        case RepairKind::ArgumentClamp: return "ArgumentClamp";
    }
    return "FuzzyEnum";
}

double clamp_value(double value, double lo, double hi) {
    return std::min(std::max(value, lo), hi);
}

std::optional<std::string> fuzzy_match(const std::string& bad,
                                       const std::vector<std::string>& allowed,
                                       int numerator, int denominator) {
    if (allowed.empty()) return std::nullopt;
    const std::string needle = canon_for_fuzzy(bad);
    const std::size_t threshold =
        (needle.size() * static_cast<std::size_t>(numerator) +
         static_cast<std::size_t>(denominator) - 1) /
        static_cast<std::size_t>(denominator);

    const std::string* best = nullptr;
    std::size_t best_distance = 0;
    for (const auto& candidate : allowed) {
        const std::size_t d = strings::edit_distance(needle, canon_for_fuzzy(candidate));
        if (best == nullptr || d < best_distance ||
            (d == best_distance && candidate < *best)) {
            best = &candidate;
            best_distance = d;
        }
    }
    if (best != nullptr && best_distance <= threshold) return *best;
    return std::nullopt;
}

FixReport fix(const Program& program, const std::vector<analysis::Diagnostic>& diagnostics,
              const Registry& registry) {
    return FixSession(program, registry).run(diagnostics);
}

nlohmann::json FixReport::to_json(const Registry& registry) const {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& r : repairs) {
        entries.push_back({{"rule", std::string(repair_kind_name(r.kind))},
                           {"span", {{"line", r.span.line}, {"col", r.span.col}}},
                           {"before", r.before},
                           {"after", r.after}});
    }
    return nlohmann::json{{"program", pretty_print(program, registry)},
                          {"repairs", std::move(entries)},
                          {"residualDiagnostics", analysis::diagnostics_to_json(residual)}};
}

}  // namespace odsl::autofix
