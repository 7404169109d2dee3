#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "odsl/lang/ast.hpp"

namespace odsl::analysis {

enum class DiagCode {
    UnknownStatement,
    UnknownParameter,
    TypeMismatch,
    EnumValueInvalid,
    RangeViolation,
    ScopeHierarchyViolation,
    UseBeforeDef,
    RebindConflict,
    MissingRequiredParam,
    IllegalBinding,
};

std::string_view diag_code_name(DiagCode code);

struct Diagnostic {
    DiagCode code;
    Span span;
    std::string message;
    // Machine-readable payload: offending value, candidate enum list, the
    // statement/parameter involved. Consumed by the code-correction layer.
    nlohmann::json payload;

    nlohmann::json to_json() const;
};

nlohmann::json diagnostics_to_json(const std::vector<Diagnostic>& diags);

}  // namespace odsl::analysis
