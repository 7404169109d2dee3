#include "odsl/lang/schema.hpp"

namespace odsl {

int hierarchy_depth(EntityType t) {
    switch (t) {
        case EntityType::Presentation: return 0;
        case EntityType::Slides: return 1;
        case EntityType::Shapes: return 2;
        case EntityType::TextRanges: return 3;
    }
    return 3;
}

bool strictly_above(EntityType outer, EntityType inner) {
    return hierarchy_depth(outer) < hierarchy_depth(inner);
}

std::string_view entity_type_name(EntityType t) {
    switch (t) {
        case EntityType::Presentation: return "presentation";
        case EntityType::Slides: return "slides";
        case EntityType::Shapes: return "shapes";
        case EntityType::TextRanges: return "textRanges";
    }
    return "textRanges";
}

std::optional<EntityType> entity_type_from_name(std::string_view name) {
    if (name == "presentation") return EntityType::Presentation;
    if (name == "slides") return EntityType::Slides;
    if (name == "shapes") return EntityType::Shapes;
    if (name == "textRanges") return EntityType::TextRanges;
    return std::nullopt;
}

std::string_view family_name(StatementFamily f) {
    switch (f) {
        case StatementFamily::Select: return "select";
        case StatementFamily::Insert: return "insert";
        case StatementFamily::Format: return "format";
        case StatementFamily::Delete: return "delete";
        case StatementFamily::Delegation: return "delegation";
    }
    return "select";
}

const ParamSpec* StatementSchema::param(std::string_view name) const {
    for (const auto& p : params) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

std::size_t StatementSchema::param_index(std::string_view name) const {
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (params[i].name == name) return i;
    }
    return params.size();
}

}  // namespace odsl
