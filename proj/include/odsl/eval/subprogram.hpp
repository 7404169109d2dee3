#pragma once

#include "odsl/lang/ast.hpp"

namespace odsl::eval {

// True iff `accepted` is contained in `generated`: an order-preserving
// injection of accepted's statements into generated's exists under a
// consistent (injective) variable substitution massaged from bindings and
// references. A generated statement may carry extra parameters, and the
// generated program may carry extra statements.
bool is_subprogram(const Program& accepted, const Program& generated);

}  // namespace odsl::eval
