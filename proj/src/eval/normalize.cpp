#include "odsl/eval/normalize.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "odsl/analysis/checker.hpp"
#include "odsl/lang/printer.hpp"

namespace odsl::eval {

namespace {

const std::set<std::string>& desensitized_numeric_params() {
    static const std::set<std::string> names{"top", "left", "height", "width", "size"};
    return names;
}

void desensitize_statement(Statement& stmt, const Registry& registry) {
    const StatementSchema* schema = registry.lookup(stmt.name);
    for (auto& arg : stmt.args) {
        const ParamSpec* p = schema != nullptr ? schema->param(arg.name) : nullptr;
        if (p != nullptr && p->free_form && arg.value.kind == Value::Kind::String) {
            arg.value = Value::str("<STR>");
        } else if (arg.value.kind == Value::Kind::Number &&
                   desensitized_numeric_params().count(arg.name) > 0) {
            arg.value = Value::str("<NUM>");
        }
    }
}

void order_args_by_schema(Statement& stmt, const Registry& registry) {
    const StatementSchema* schema = registry.lookup(stmt.name);
    if (schema == nullptr) return;
    std::stable_sort(stmt.args.begin(), stmt.args.end(),
                     [&](const Argument& a, const Argument& b) {
                         return schema->param_index(a.name) < schema->param_index(b.name);
                     });
}

// Ordering key that ignores variable identities, so the canonical statement
// order does not depend on the names we are about to rewrite.
std::string statement_key(const Statement& stmt, const Registry& registry) {
    Statement masked = stmt;
    masked.binding.reset();
    for (auto& arg : masked.args) {
        if (arg.value.kind == Value::Kind::VarRef) arg.value = Value::var("<VAR>");
    }
    order_args_by_schema(masked, registry);
    return print_statement(masked, registry);
}

}  // namespace

Program normalize_program(const Program& program, const Registry& registry, bool desensitize) {
    // Work from the checked form so select scopes are explicit.
    Program work = analysis::check(program, registry).typed.program();

    if (desensitize) {
        for (auto& stmt : work.statements) desensitize_statement(stmt, registry);
    }

    const std::size_t n = work.statements.size();

    // Def-use edges: a statement depends on the latest earlier binder of
    // every variable it references.
    std::vector<std::set<std::size_t>> successors(n);
    std::vector<std::size_t> indegree(n, 0);
    std::map<std::string, std::size_t> last_binder;
    for (std::size_t i = 0; i < n; ++i) {
        const Statement& stmt = work.statements[i];
        for (const auto& arg : stmt.args) {
            if (arg.value.kind != Value::Kind::VarRef) continue;
            auto it = last_binder.find(arg.value.text);
            if (it != last_binder.end() && successors[it->second].insert(i).second) {
                ++indegree[i];
            }
        }
        if (stmt.binding) last_binder[*stmt.binding] = i;
    }

    // Canonical topological order: among ready statements, smallest
    // (key, original index) first.
    std::vector<std::string> keys(n);
    for (std::size_t i = 0; i < n; ++i) keys[i] = statement_key(work.statements[i], registry);

    auto later = [&](std::size_t a, std::size_t b) {
        if (keys[a] != keys[b]) return keys[a] > keys[b];
        return a > b;
    };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(later)> ready(later);
    for (std::size_t i = 0; i < n; ++i) {
        if (indegree[i] == 0) ready.push(i);
    }

    std::vector<std::size_t> order;
    order.reserve(n);
    while (!ready.empty()) {
        const std::size_t i = ready.top();
        ready.pop();
        order.push_back(i);
        for (std::size_t next : successors[i]) {
            if (--indegree[next] == 0) ready.push(next);
        }
    }
    // A parse-level cycle (self-reference) cannot happen in checked
    // programs; keep any stragglers in original order.
    if (order.size() != n) {
        std::set<std::size_t> seen(order.begin(), order.end());
        for (std::size_t i = 0; i < n; ++i) {
            if (seen.count(i) == 0) order.push_back(i);
        }
    }

    Program out;
    out.statements.reserve(n);
    for (std::size_t i : order) out.statements.push_back(work.statements[i]);

    // Rename variables to v1, v2, ... in first-definition order.
    std::map<std::string, std::string> rename;
    int counter = 0;
    for (auto& stmt : out.statements) {
        if (stmt.binding && rename.find(*stmt.binding) == rename.end()) {
            rename[*stmt.binding] = "v" + std::to_string(++counter);
        }
    }
    for (auto& stmt : out.statements) {
        if (stmt.binding) {
            auto it = rename.find(*stmt.binding);
            if (it != rename.end()) stmt.binding = it->second;
        }
        for (auto& arg : stmt.args) {
            if (arg.value.kind == Value::Kind::VarRef) {
                auto it = rename.find(arg.value.text);
                if (it != rename.end()) arg.value.text = it->second;
            }
        }
        order_args_by_schema(stmt, registry);
        stmt.span = Span{0, 0};
    }
    return out;
}

}  // namespace odsl::eval
