#include "odsl/doc/document.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace odsl::doc {

using nlohmann::json;

const Shape* Slide::shape(const std::string& name) const {
    for (const auto& s : shapes) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

Shape* Slide::shape(const std::string& name) {
    return const_cast<Shape*>(static_cast<const Slide*>(this)->shape(name));
}

EntityPath EntityPath::of_slide(int index) {
    EntityPath p;
    p.slide = index;
    return p;
}

EntityPath EntityPath::of_shape(int slide_index, std::string shape_name) {
    EntityPath p;
    p.slide = slide_index;
    p.shape = std::move(shape_name);
    return p;
}

bool EntityPath::operator<(const EntityPath& other) const {
    if (slide != other.slide) return slide < other.slide;
    return shape < other.shape;
}

json EntityPath::to_json() const {
    json arr = json::array();
    if (slide) arr.push_back(*slide);
    if (shape) arr.push_back(*shape);
    return arr;
}

EntityPath EntityPath::from_json(const json& j) {
    if (!j.is_array() || j.size() > 2) throw std::runtime_error("bad entity path");
    EntityPath p;
    if (!j.empty()) p.slide = j.at(0).get<int>();
    if (j.size() == 2) p.shape = j.at(1).get<std::string>();
    return p;
}

const Shape* PresentationDoc::resolve_shape(const EntityPath& path) const {
    if (!path.slide || !path.shape) return nullptr;
    if (*path.slide < 0 || static_cast<std::size_t>(*path.slide) >= slides.size()) return nullptr;
    return slides[static_cast<std::size_t>(*path.slide)].shape(*path.shape);
}

Shape* PresentationDoc::resolve_shape(const EntityPath& path) {
    return const_cast<Shape*>(static_cast<const PresentationDoc*>(this)->resolve_shape(path));
}

bool PresentationDoc::resolves(const EntityPath& path) const {
    if (!path.slide) return true;  // presentation root
    if (*path.slide < 0 || static_cast<std::size_t>(*path.slide) >= slides.size()) return false;
    if (!path.shape) return true;
    return resolve_shape(path) != nullptr;
}

void PresentationDoc::prune_selection() {
    selection.erase(std::remove_if(selection.begin(), selection.end(),
                                   [&](const EntityPath& p) { return !resolves(p); }),
                    selection.end());
}

namespace {

json text_range_to_json(const TextRange& tr) {
    return json{{"text", tr.text},
                {"bold", tr.style.bold},
                {"italic", tr.style.italic},
                {"fontName", tr.style.font_name},
                {"size", tr.style.size},
                {"color", tr.style.color},
                {"underline", tr.style.underline},
                {"horizontalAlignment", tr.style.horizontal_alignment},
                {"bulleted", tr.style.bulleted}};
}

TextRange text_range_from_json(const json& j) {
    TextRange tr;
    tr.text = j.value("text", "");
    tr.style.bold = j.value("bold", false);
    tr.style.italic = j.value("italic", false);
    tr.style.font_name = j.value("fontName", "Calibri");
    tr.style.size = j.value("size", 18.0);
    tr.style.color = j.value("color", "#000000");
    tr.style.underline = j.value("underline", "None");
    tr.style.horizontal_alignment = j.value("horizontalAlignment", "Left");
    tr.style.bulleted = j.value("bulleted", false);
    return tr;
}

void require_unit_range(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0))
        throw std::runtime_error(std::string("document: ") + what + " must be within [0, 1]");
}

}  // namespace

json PresentationDoc::to_json() const {
    json slides_json = json::array();
    for (std::size_t i = 0; i < slides.size(); ++i) {
        const Slide& slide = slides[i];
        json shapes_json = json::array();
        for (const auto& shape : slide.shapes) {
            json s{{"name", shape.name},
                   {"shapeType", shape.shape_type},
                   {"top", shape.geometry.top},
                   {"left", shape.geometry.left},
                   {"height", shape.geometry.height},
                   {"width", shape.geometry.width},
                   {"fill", {{"color", shape.fill.color}, {"transparency", shape.fill.transparency}}},
                   {"line", {{"color", shape.line.color}, {"transparency", shape.line.transparency}}}};
            if (shape.text_range) s["textRange"] = text_range_to_json(*shape.text_range);
            shapes_json.push_back(std::move(s));
        }
        json s{{"index", static_cast<int>(i)}, {"shapes", std::move(shapes_json)}};
        if (slide.layout) s["layout"] = *slide.layout;
        slides_json.push_back(std::move(s));
    }

    json sel = json::array();
    for (const auto& p : selection) sel.push_back(p.to_json());

    return json{{"formatVersion", 1}, {"slides", std::move(slides_json)}, {"selection", std::move(sel)}};
}

PresentationDoc PresentationDoc::from_json(const json& j) {
    PresentationDoc doc;
    int expected_index = 0;
    for (const auto& sj : j.value("slides", json::array())) {
        Slide slide;
        if (sj.contains("index") && sj.at("index").get<int>() != expected_index)
            throw std::runtime_error("document: slide indices must be contiguous from 0");
        ++expected_index;
        if (sj.contains("layout")) slide.layout = sj.at("layout").get<std::string>();
        for (const auto& shj : sj.value("shapes", json::array())) {
            Shape shape;
            shape.name = shj.at("name").get<std::string>();
            if (slide.shape(shape.name) != nullptr)
                throw std::runtime_error("document: duplicate shape name '" + shape.name + "'");
            shape.shape_type = shj.value("shapeType", "Rectangle");
            shape.geometry.top = shj.value("top", 100.0);
            shape.geometry.left = shj.value("left", 100.0);
            shape.geometry.height = shj.value("height", 100.0);
            shape.geometry.width = shj.value("width", 200.0);
            if (shape.geometry.height < 0 || shape.geometry.width < 0)
                throw std::runtime_error("document: height/width must be non-negative");
            if (shj.contains("fill")) {
                shape.fill.color = shj.at("fill").value("color", "white");
                shape.fill.transparency = shj.at("fill").value("transparency", 0.0);
            }
            if (shj.contains("line")) {
                shape.line.color = shj.at("line").value("color", "black");
                shape.line.transparency = shj.at("line").value("transparency", 0.0);
            }
            require_unit_range(shape.fill.transparency, "fill transparency");
            require_unit_range(shape.line.transparency, "line transparency");
            if (shj.contains("textRange")) shape.text_range = text_range_from_json(shj.at("textRange"));
            slide.shapes.push_back(std::move(shape));
        }
        doc.slides.push_back(std::move(slide));
    }

    if (j.contains("selection")) {
        for (const auto& pj : j.at("selection")) doc.selection.push_back(EntityPath::from_json(pj));
    } else if (!doc.slides.empty()) {
        doc.selection.push_back(EntityPath::of_slide(0));
    }
    doc.prune_selection();
    return doc;
}

PresentationDoc PresentationDoc::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("document: cannot open " + path);
    json j = json::parse(in);
    return from_json(j);
}

void PresentationDoc::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("document: cannot write " + path);
    out << to_json().dump(2) << '\n';
}

}  // namespace odsl::doc
