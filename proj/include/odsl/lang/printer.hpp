#pragma once

#include <string>

#include "odsl/lang/ast.hpp"
#include "odsl/lang/registry.hpp"

namespace odsl {

std::string print_value(const Value& v);

// One statement on one line, arguments in schema declaration order when the
// statement resolves in the registry (source order otherwise).
std::string print_statement(const Statement& stmt, const Registry& registry);

// Canonical text: one statement per line, trailing newline; the empty
// program prints as the empty string. parse(pretty_print(p)) == p.
std::string pretty_print(const Program& program, const Registry& registry);

}  // namespace odsl
