#include "odsl/analysis/checker.hpp"

#include <regex>

#include "odsl/support/strings.hpp"

namespace odsl::analysis {
namespace {

std::string kind_word(const Value& v) {
    switch (v.kind) {
        case Value::Kind::Number: return "number";
        case Value::Kind::String: return "string";
        case Value::Kind::Boolean: return "boolean";
        case Value::Kind::VarRef: return "variable";
    }
    return "value";
}

bool regex_like(const std::string& text) {
    return text.size() >= 2 && text.front() == '/' && text.back() == '/';
}

class Checker {
public:
    Checker(const Program& program, const Registry& registry)
        : program_(program), registry_(registry) {}

    CheckResult run() {
        for (std::size_t i = 0; i < program_.statements.size(); ++i) {
            stmt_index_ = i;
            check_statement(program_.statements[i]);
        }
        for (const auto& [name, type] : env_) {
            if (type) result_.typed.env[name] = *type;
        }
        return std::move(result_);
    }

private:
    void diag(DiagCode code, Span span, std::string message, nlohmann::json payload = {}) {
        if (payload.is_null()) payload = nlohmann::json::object();
        payload["stmtIndex"] = stmt_index_;
        result_.diagnostics.push_back(Diagnostic{code, span, std::move(message), std::move(payload)});
    }

    void check_statement(const Statement& stmt) {
        TypedStatement typed;
        typed.statement = stmt;
        typed.schema = registry_.lookup(stmt.name);

        if (typed.schema == nullptr) {
            diag(DiagCode::UnknownStatement, stmt.span, "unknown statement '" + stmt.name + "'",
                 {{"statement", stmt.name}});
            // Poison the binding so later uses do not cascade into
            // UseBeforeDef noise.
            if (stmt.binding) bind(stmt, std::nullopt);
            result_.typed.statements.push_back(std::move(typed));
            return;
        }

        const StatementSchema& schema = *typed.schema;
        for (const auto& arg : stmt.args) check_argument(stmt, schema, arg);

        for (const auto& p : schema.params) {
            if (p.required && stmt.arg(p.name) == nullptr) {
                diag(DiagCode::MissingRequiredParam, stmt.span,
                     "statement '" + stmt.name + "' requires parameter '" + p.name + "'",
                     {{"statement", stmt.name}, {"param", p.name}});
            }
        }

        // Make the Selection default explicit for select statements.
        if (schema.family == StatementFamily::Select) {
            if (const ParamSpec* scope = schema.param("scope");
                scope != nullptr && stmt.arg("scope") == nullptr) {
                Argument injected;
                injected.name = "scope";
                injected.value = Value::str(scope->default_str.value_or("Selection"));
                injected.span = stmt.span;
                typed.statement.args.push_back(std::move(injected));
            }
        }

        if (stmt.binding) {
            if (!schema.returns) {
                diag(DiagCode::IllegalBinding, stmt.span,
                     "'" + stmt.name + "' returns nothing; it cannot be bound to '" +
                         *stmt.binding + "'",
                     {{"statement", stmt.name}, {"var", *stmt.binding}});
            } else {
                bind(stmt, schema.returns);
            }
        }

        result_.typed.statements.push_back(std::move(typed));
    }

    void bind(const Statement& stmt, std::optional<EntityType> type) {
        const std::string& name = *stmt.binding;
        if (env_.count(name) > 0) {
            diag(DiagCode::RebindConflict, stmt.span,
                 "variable '" + name + "' is already bound", {{"var", name}});
        }
        env_[name] = type;  // last binding wins
    }

    void check_argument(const Statement& stmt, const StatementSchema& schema, const Argument& arg) {
        const ParamSpec* p = schema.param(arg.name);
        if (p == nullptr) {
            diag(DiagCode::UnknownParameter, arg.span,
                 "'" + stmt.name + "' has no parameter '" + arg.name + "'",
                 {{"statement", stmt.name}, {"param", arg.name}});
            return;
        }

        const Value& v = arg.value;
        switch (p->kind) {
            case ParamKind::Number:
                if (v.kind != Value::Kind::Number) type_mismatch(arg, "a number");
                break;
            case ParamKind::RangedNumber:
                if (v.kind != Value::Kind::Number) {
                    type_mismatch(arg, "a number");
                } else if (v.number < p->lo || v.number > p->hi) {
                    diag(DiagCode::RangeViolation, arg.span,
                         "value " + strings::number_to_string(v.number) + " for '" + p->name +
                             "' is outside [" + strings::number_to_string(p->lo) + ", " +
                             strings::number_to_string(p->hi) + "]",
                         {{"param", p->name},
                          {"value", v.number},
                          {"lo", p->lo},
                          {"hi", p->hi}});
                }
                break;
            case ParamKind::Boolean:
                if (v.kind != Value::Kind::Boolean) type_mismatch(arg, "a boolean");
                break;
            case ParamKind::String:
                if (v.kind != Value::Kind::String) type_mismatch(arg, "a string");
                break;
            case ParamKind::StringOrRegex:
                if (v.kind != Value::Kind::String) {
                    type_mismatch(arg, "a string or /regex/");
                } else if (regex_like(v.text)) {
                    try {
                        std::regex re(v.text.substr(1, v.text.size() - 2));
                    } catch (const std::regex_error&) {
                        type_mismatch(arg, "a valid /regex/");
                    }
                }
                break;
            case ParamKind::Enum:
                if (v.kind != Value::Kind::String) {
                    type_mismatch(arg, "one of the '" + p->enum_name + "' values");
                } else if (std::find(p->enum_values.begin(), p->enum_values.end(), v.text) ==
                           p->enum_values.end()) {
                    diag(DiagCode::EnumValueInvalid, arg.span,
                         "'" + v.text + "' is not a valid value for '" + p->name + "'",
                         {{"statement", stmt.name},
                          {"param", p->name},
                          {"value", v.text},
                          {"allowed", p->enum_values}});
                }
                break;
            case ParamKind::EntityRef:
                check_entity_ref(arg, *p);
                break;
            case ParamKind::ScopeRef:
                check_scope(stmt, schema, arg);
                break;
        }
    }

    void check_entity_ref(const Argument& arg, const ParamSpec& p) {
        const Value& v = arg.value;
        if (v.kind != Value::Kind::VarRef) {
            diag(DiagCode::TypeMismatch, arg.span,
                 "'" + arg.name + "' expects a variable of type " +
                     std::string(entity_type_name(p.entity)) + ", got a " + kind_word(v),
                 {{"param", arg.name}, {"expected", std::string(entity_type_name(p.entity))}});
            return;
        }
        auto bound = lookup(v.text);
        if (!bound.has_value()) {
            diag(DiagCode::UseBeforeDef, arg.span, "variable '" + v.text + "' is not defined",
                 {{"var", v.text}});
            return;
        }
        if (!bound->has_value()) return;  // poisoned; already reported
        if (**bound != p.entity) {
            diag(DiagCode::TypeMismatch, arg.span,
                 "'" + arg.name + "' expects " + std::string(entity_type_name(p.entity)) +
                     ", but '" + v.text + "' has type " +
                     std::string(entity_type_name(**bound)),
                 {{"param", arg.name},
                  {"expected", std::string(entity_type_name(p.entity))},
                  {"actual", std::string(entity_type_name(**bound))},
                  {"var", v.text}});
        }
    }

    void check_scope(const Statement& stmt, const StatementSchema& schema, const Argument& arg) {
        const Value& v = arg.value;
        if (is_special_scope(v)) return;
        if (v.kind == Value::Kind::VarRef) {
            auto bound = lookup(v.text);
            if (!bound.has_value()) {
                diag(DiagCode::UseBeforeDef, arg.span, "variable '" + v.text + "' is not defined",
                     {{"var", v.text}});
                return;
            }
            if (!bound->has_value()) return;  // poisoned
            if (!strictly_above(**bound, schema.target)) {
                diag(DiagCode::ScopeHierarchyViolation, arg.span,
                     "cannot select " + std::string(entity_type_name(schema.target)) +
                         " from a scope of type " + std::string(entity_type_name(**bound)),
                     {{"statement", stmt.name},
                      {"scopeType", std::string(entity_type_name(**bound))},
                      {"target", std::string(entity_type_name(schema.target))},
                      {"var", v.text}});
            }
            return;
        }
        diag(DiagCode::TypeMismatch, arg.span,
             "'scope' expects a variable, \"Presentation\" or \"Selection\"",
             {{"param", "scope"}});
    }

    void type_mismatch(const Argument& arg, const std::string& expected) {
        std::string shown;
        switch (arg.value.kind) {
            case Value::Kind::Number: shown = strings::number_to_string(arg.value.number); break;
            case Value::Kind::Boolean: shown = arg.value.boolean ? "true" : "false"; break;
            default: shown = "'" + arg.value.text + "'"; break;
        }
        diag(DiagCode::TypeMismatch, arg.span,
             "'" + arg.name + "' expects " + expected + ", got " + kind_word(arg.value) + " " + shown,
             {{"param", arg.name}, {"expected", expected}});
    }

    // nullopt: never bound. optional<nullopt>: bound but untyped (poison).
    std::optional<std::optional<EntityType>> lookup(const std::string& name) const {
        auto it = env_.find(name);
        if (it == env_.end()) return std::nullopt;
        return it->second;
    }

    const Program& program_;
    const Registry& registry_;
    std::map<std::string, std::optional<EntityType>> env_;
    std::size_t stmt_index_ = 0;
    CheckResult result_;
};

}  // namespace

Program TypedProgram::program() const {
    Program out;
    out.statements.reserve(statements.size());
    for (const auto& ts : statements) out.statements.push_back(ts.statement);
    return out;
}

CheckResult check(const Program& program, const Registry& registry) {
    return Checker(program, registry).run();
}

std::map<std::string, EntityType> entity_env(const TypedProgram& tp) {
    return tp.env;
}

}  // namespace odsl::analysis
