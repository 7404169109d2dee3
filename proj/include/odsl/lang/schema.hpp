#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace odsl {

// Entity hierarchy: presentation > slides > shapes > textRanges.
enum class EntityType { Presentation, Slides, Shapes, TextRanges };

// Depth in the containment hierarchy; smaller is higher.
int hierarchy_depth(EntityType t);

// True when `outer` is strictly above `inner` (an `inner` may be selected
// from an `outer` scope, never the other way around).
bool strictly_above(EntityType outer, EntityType inner);

std::string_view entity_type_name(EntityType t);
std::optional<EntityType> entity_type_from_name(std::string_view name);

enum class StatementFamily { Select, Insert, Format, Delete, Delegation };

std::string_view family_name(StatementFamily f);

// Literal/argument type of one statement parameter.
enum class ParamKind {
    Number,
    String,
    Boolean,
    RangedNumber,
    StringOrRegex,
    Enum,
    EntityRef,
    ScopeRef,
};

struct ParamSpec {
    std::string name;  // camelCase
    ParamKind kind = ParamKind::String;
    bool required = false;
    bool free_form = false;  // desensitizable in program normalization
    double lo = 0.0;         // RangedNumber bounds, lo < hi
    double hi = 0.0;
    std::string enum_name;
    std::vector<std::string> enum_values;     // canonical spellings, unique
    EntityType entity = EntityType::Slides;   // EntityRef target
    std::optional<std::string> default_str;   // ScopeRef default ("Selection")
};

struct StatementSchema {
    std::string name;  // snake_case
    StatementFamily family = StatementFamily::Select;
    EntityType target = EntityType::Slides;
    std::vector<ParamSpec> params;          // declaration order
    std::optional<EntityType> returns;      // select/insert/delegation only

    const ParamSpec* param(std::string_view name) const;
    // Index in declaration order, or params.size() when unknown.
    std::size_t param_index(std::string_view name) const;
};

}  // namespace odsl
