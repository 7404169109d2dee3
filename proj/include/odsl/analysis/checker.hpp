#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "odsl/analysis/diagnostics.hpp"
#include "odsl/lang/ast.hpp"
#include "odsl/lang/registry.hpp"

namespace odsl::analysis {

struct TypedStatement {
    Statement statement;                    // select statements carry an explicit scope
    const StatementSchema* schema = nullptr;  // null when the name did not resolve
};

// A checked program: resolved schemas, injected scope defaults and the final
// variable environment. Downstream passes never branch on a missing scope.
struct TypedProgram {
    std::vector<TypedStatement> statements;
    std::map<std::string, EntityType> env;

    Program program() const;
};

struct CheckResult {
    TypedProgram typed;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return diagnostics.empty(); }
};

// Static validation: name resolution, parameter and literal typing, enum
// membership, numeric ranges, scope hierarchy, def-before-use and binding
// legality. Collects every diagnostic it can rather than stopping at the
// first; diagnostic order is stable (statement order, argument order).
CheckResult check(const Program& program, const Registry& registry);

// Final variable -> entity type environment of a checked program.
std::map<std::string, EntityType> entity_env(const TypedProgram& tp);

}  // namespace odsl::analysis
