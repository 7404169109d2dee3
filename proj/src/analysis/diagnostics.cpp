#include "odsl/analysis/diagnostics.hpp"

namespace odsl::analysis {

std::string_view diag_code_name(DiagCode code) {
    switch (code) {
        case DiagCode::UnknownStatement: return "UnknownStatement";
        case DiagCode::UnknownParameter: return "UnknownParameter";
        case DiagCode::TypeMismatch: return "TypeMismatch";
        case DiagCode::EnumValueInvalid: return "EnumValueInvalid";
        case DiagCode::RangeViolation: return "RangeViolation";
        case DiagCode::ScopeHierarchyViolation: return "ScopeHierarchyViolation";
        case DiagCode::UseBeforeDef: return "UseBeforeDef";
        case DiagCode::RebindConflict: return "RebindConflict";
        case DiagCode::MissingRequiredParam: return "MissingRequiredParam";
        case DiagCode::IllegalBinding: return "IllegalBinding";
    }
    return "UnknownStatement";
}

nlohmann::json Diagnostic::to_json() const {
    nlohmann::json out{{"code", std::string(diag_code_name(code))},
                       {"span", {{"line", span.line}, {"col", span.col}}},
                       {"message", message}};
    if (!payload.is_null()) out["payload"] = payload;
    return out;
}

nlohmann::json diagnostics_to_json(const std::vector<Diagnostic>& diags) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& d : diags) arr.push_back(d.to_json());
    return arr;
}

}  // namespace odsl::analysis
