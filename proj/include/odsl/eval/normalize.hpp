#pragma once

#include "odsl/lang/ast.hpp"
#include "odsl/lang/registry.hpp"

namespace odsl::eval {

// Canonicalizes a program for comparison: select scopes are made explicit,
// statements are reordered by a canonical topological sort of the def-use
// graph (independent statements ordered by a name-insensitive statement
// key), variables renamed to v1, v2, ... in definition order and arguments
// put in schema declaration order. With `desensitize`, free-form string
// parameters become "<STR>" and geometry/size numbers become "<NUM>".
// Idempotent.
Program normalize_program(const Program& program, const Registry& registry, bool desensitize);

}  // namespace odsl::eval
