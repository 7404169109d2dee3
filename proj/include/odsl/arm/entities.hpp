#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "odsl/lang/schema.hpp"

namespace odsl::arm {

// Classifier-level entity tags. A superset of the language's entity types:
// images are shapes at the language level but get their own tag for
// finer-grained prompt selection.
enum class EntityTag { Presentation, Slide, Text, Image, Shape };

using EntityTagSet = std::set<EntityTag>;

std::string_view tag_name(EntityTag tag);
std::optional<EntityTag> tag_from_name(std::string_view name);
const EntityTagSet& all_tags();

// Language-level entity type a tag maps onto (image -> shapes, text ->
// textRanges).
EntityType tag_entity_type(EntityTag tag);

std::string tag_set_to_string(const EntityTagSet& tags);

}  // namespace odsl::arm
