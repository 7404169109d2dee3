#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace odsl::doc {

inline constexpr double kCanvasWidth = 960.0;   // points, origin top-left
inline constexpr double kCanvasHeight = 540.0;

struct TextStyle {
    bool bold = false;
    bool italic = false;
    std::string font_name = "Calibri";
    double size = 18.0;
    std::string color = "#000000";
    std::string underline = "None";
    std::string horizontal_alignment = "Left";
    bool bulleted = false;

    bool operator==(const TextStyle&) const = default;
};

struct TextRange {
    std::string text;
    TextStyle style;

    bool operator==(const TextRange&) const = default;
};

struct FillStyle {
    std::string color = "white";
    double transparency = 0.0;  // in [0, 1]

    bool operator==(const FillStyle&) const = default;
};

struct LineStyle {
    std::string color = "black";
    double transparency = 0.0;

    bool operator==(const LineStyle&) const = default;
};

struct Geometry {
    double top = 100.0;
    double left = 100.0;
    double height = 100.0;
    double width = 200.0;

    bool operator==(const Geometry&) const = default;
};

struct Shape {
    std::string name;  // unique within its slide
    std::string shape_type;
    Geometry geometry;
    FillStyle fill;
    LineStyle line;
    std::optional<TextRange> text_range;

    bool operator==(const Shape&) const = default;
};

struct Slide {
    std::optional<std::string> layout;
    std::vector<Shape> shapes;

    bool operator==(const Slide&) const = default;
    const Shape* shape(const std::string& name) const;
    Shape* shape(const std::string& name);
};

// Path to an entity: {} is the presentation, {slide} a slide, {slide, shape}
// a shape or its textRange (which of the two is decided by context).
struct EntityPath {
    std::optional<int> slide;
    std::optional<std::string> shape;

    static EntityPath presentation() { return {}; }
    static EntityPath of_slide(int index);
    static EntityPath of_shape(int slide_index, std::string shape_name);

    bool operator==(const EntityPath&) const = default;
    bool operator<(const EntityPath& other) const;

    nlohmann::json to_json() const;
    static EntityPath from_json(const nlohmann::json& j);
};

struct PresentationDoc {
    std::vector<Slide> slides;
    std::vector<EntityPath> selection;  // current user selection

    bool operator==(const PresentationDoc&) const = default;

    const Shape* resolve_shape(const EntityPath& path) const;
    Shape* resolve_shape(const EntityPath& path);
    bool resolves(const EntityPath& path) const;
    // Drops selection entries that no longer resolve.
    void prune_selection();

    nlohmann::json to_json() const;
    static PresentationDoc from_json(const nlohmann::json& j);
    static PresentationDoc load_file(const std::string& path);
    void save_file(const std::string& path) const;
};

}  // namespace odsl::doc
