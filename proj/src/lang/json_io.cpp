#include "odsl/lang/json_io.hpp"

namespace odsl {

using nlohmann::json;

json value_to_json(const Value& v) {
    switch (v.kind) {
        case Value::Kind::Number: return json{{"kind", "number"}, {"value", v.number}};
        case Value::Kind::String: return json{{"kind", "string"}, {"value", v.text}};
        case Value::Kind::Boolean: return json{{"kind", "boolean"}, {"value", v.boolean}};
        case Value::Kind::VarRef: return json{{"kind", "var"}, {"value", v.text}};
    }
    return {};
}

json statement_to_json(const Statement& s) {
    json args = json::array();
    for (const auto& a : s.args) {
        args.push_back({{"name", a.name}, {"value", value_to_json(a.value)}});
    }
    json out{{"name", s.name},
             {"args", std::move(args)},
             {"span", {{"line", s.span.line}, {"col", s.span.col}}}};
    if (s.binding) out["binding"] = *s.binding;
    return out;
}

json program_to_json(const Program& p) {
    json stmts = json::array();
    for (const auto& s : p.statements) stmts.push_back(statement_to_json(s));
    return json{{"statements", std::move(stmts)}};
}

}  // namespace odsl
