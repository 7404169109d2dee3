#include "odsl/lang/printer.hpp"

#include <algorithm>

#include "odsl/support/strings.hpp"

namespace odsl {

std::string print_value(const Value& v) {
    switch (v.kind) {
        case Value::Kind::Number: return strings::number_to_string(v.number);
        case Value::Kind::Boolean: return v.boolean ? "true" : "false";
        case Value::Kind::String: {
            std::string out = "\"";
            for (char c : v.text) {
                if (c == '"' || c == '\\') out += '\\';
                if (c == '\n') {
                    out += "\\n";
                    continue;
                }
                out += c;
            }
            out += '"';
            return out;
        }
        case Value::Kind::VarRef: return v.text;
    }
    return {};
}

std::string print_statement(const Statement& stmt, const Registry& registry) {
    std::string out;
    if (stmt.binding) {
        out += *stmt.binding;
        out += " = ";
    }
    out += stmt.name;
    out += '(';

    std::vector<const Argument*> ordered;
    ordered.reserve(stmt.args.size());
    for (const auto& a : stmt.args) ordered.push_back(&a);
    if (const StatementSchema* schema = registry.lookup(stmt.name)) {
        std::stable_sort(ordered.begin(), ordered.end(),
                         [&](const Argument* a, const Argument* b) {
                             return schema->param_index(a->name) < schema->param_index(b->name);
                         });
    }

    bool first = true;
    for (const Argument* a : ordered) {
        if (!first) out += ", ";
        first = false;
        out += a->name;
        out += '=';
        out += print_value(a->value);
    }
    out += ')';
    return out;
}

std::string pretty_print(const Program& program, const Registry& registry) {
    std::string out;
    for (const auto& stmt : program.statements) {
        out += print_statement(stmt, registry);
        out += '\n';
    }
    return out;
}

}  // namespace odsl
