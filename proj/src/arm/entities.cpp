#include "odsl/arm/entities.hpp"

namespace odsl::arm {

std::string_view tag_name(EntityTag tag) {
    switch (tag) {
        case EntityTag::Presentation: return "presentation";
        case EntityTag::Slide: return "slide";
        case EntityTag::Text: return "text";
        case EntityTag::Image: return "image";
        case EntityTag::Shape: return "shape";
    }
    return "text";
}

std::optional<EntityTag> tag_from_name(std::string_view name) {
    if (name == "presentation") return EntityTag::Presentation;
    if (name == "slide") return EntityTag::Slide;
    if (name == "text") return EntityTag::Text;
    if (name == "image") return EntityTag::Image;
    if (name == "shape") return EntityTag::Shape;
    return std::nullopt;
}

const EntityTagSet& all_tags() {
    static const EntityTagSet tags{EntityTag::Presentation, EntityTag::Slide, EntityTag::Text,
                                   EntityTag::Image, EntityTag::Shape};
    return tags;
}

EntityType tag_entity_type(EntityTag tag) {
    switch (tag) {
        case EntityTag::Presentation: return EntityType::Presentation;
        case EntityTag::Slide: return EntityType::Slides;
        case EntityTag::Text: return EntityType::TextRanges;
        case EntityTag::Image: return EntityType::Shapes;
        case EntityTag::Shape: return EntityType::Shapes;
    }
    return EntityType::Shapes;
}

std::string tag_set_to_string(const EntityTagSet& tags) {
    std::string out;
    for (EntityTag t : tags) {
        if (!out.empty()) out += ", ";
        out += tag_name(t);
    }
    return out;
}

}  // namespace odsl::arm
