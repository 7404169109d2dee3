#include "odsl/lang/ast.hpp"

#include <algorithm>

namespace odsl {

Value Value::num(double v) {
    Value out;
    out.kind = Kind::Number;
    out.number = v;
    return out;
}

Value Value::str(std::string s) {
    Value out;
    out.kind = Kind::String;
    out.text = std::move(s);
    return out;
}

Value Value::boolean_v(bool b) {
    Value out;
    out.kind = Kind::Boolean;
    out.boolean = b;
    return out;
}

Value Value::var(std::string name) {
    Value out;
    out.kind = Kind::VarRef;
    out.text = std::move(name);
    return out;
}

bool Value::operator==(const Value& other) const {
    if (kind != other.kind) return false;
    switch (kind) {
        case Kind::Number: return number == other.number;
        case Kind::Boolean: return boolean == other.boolean;
        case Kind::String:
        case Kind::VarRef: return text == other.text;
    }
    return false;
}

bool is_special_scope(const Value& v) {
    return v.kind == Value::Kind::String &&
           (v.text == kScopePresentation || v.text == kScopeSelection);
}

const Value* Statement::arg(std::string_view param) const {
    for (const auto& a : args) {
        if (a.name == param) return &a.value;
    }
    return nullptr;
}

bool Statement::operator==(const Statement& other) const {
    if (binding != other.binding || name != other.name) return false;
    if (args.size() != other.args.size()) return false;
    for (const auto& a : args) {
        const Value* v = other.arg(a.name);
        if (v == nullptr || !(*v == a.value)) return false;
    }
    return true;
}

bool Statement::strict_equal(const Statement& other) const {
    if (binding != other.binding || name != other.name) return false;
    if (args.size() != other.args.size()) return false;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i].name != other.args[i].name) return false;
        if (!(args[i].value == other.args[i].value)) return false;
    }
    return true;
}

bool Program::operator==(const Program& other) const {
    return statements == other.statements;
}

bool Program::strict_equal(const Program& other) const {
    if (statements.size() != other.statements.size()) return false;
    for (std::size_t i = 0; i < statements.size(); ++i) {
        if (!statements[i].strict_equal(other.statements[i])) return false;
    }
    return true;
}

}  // namespace odsl
