#include "odsl/eval/subprogram.hpp"

#include <map>

namespace odsl::eval {

namespace {

struct Substitution {
    std::map<std::string, std::string> fwd;  // accepted var -> generated var
    std::map<std::string, std::string> rev;

    bool bind(const std::string& from, const std::string& to) {
        auto f = fwd.find(from);
        if (f != fwd.end()) return f->second == to;
        auto r = rev.find(to);
        if (r != rev.end()) return false;  // injective
        fwd[from] = to;
        rev[to] = from;
        return true;
    }
};

// s matches t when t has the same statement name and carries every
// (param, value) of s identically (modulo the variable substitution);
// extra parameters on t are fine.
bool statement_matches(const Statement& s, const Statement& t, Substitution& subst) {
    if (s.name != t.name) return false;
    if (s.binding) {
        if (!t.binding) return false;
        if (!subst.bind(*s.binding, *t.binding)) return false;
    }
    for (const auto& arg : s.args) {
        const Value* other = t.arg(arg.name);
        if (other == nullptr) return false;
        if (arg.value.kind == Value::Kind::VarRef) {
            if (other->kind != Value::Kind::VarRef) return false;
            if (!subst.bind(arg.value.text, other->text)) return false;
        } else if (!(arg.value == *other)) {
            return false;
        }
    }
    return true;
}

bool search(const Program& accepted, const Program& generated, std::size_t i, std::size_t j,
            const Substitution& subst) {
    if (i == accepted.statements.size()) return true;
    if (accepted.statements.size() - i > generated.statements.size() - j) return false;
    for (std::size_t t = j; t < generated.statements.size(); ++t) {
        Substitution attempt = subst;
        if (statement_matches(accepted.statements[i], generated.statements[t], attempt) &&
            search(accepted, generated, i + 1, t + 1, attempt)) {
            return true;
        }
    }
    return false;
}

}  // namespace

bool is_subprogram(const Program& accepted, const Program& generated) {
    return search(accepted, generated, 0, 0, Substitution{});
}

}  // namespace odsl::eval
