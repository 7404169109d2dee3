#include "odsl/doc/context.hpp"

#include <algorithm>

namespace odsl::doc {

using nlohmann::json;

namespace {

const char* const kIdentifierKeys[] = {"index", "name", "shapeType", "text", "layout"};

json shape_node(const Shape& shape, int index, const ContextOptions& options) {
    json node{{"index", index}, {"name", shape.name}, {"shapeType", shape.shape_type}};
    if (shape.text_range && !shape.text_range->text.empty()) {
        const std::string& text = shape.text_range->text;
        node["text"] = text.size() > options.text_budget
                           ? text.substr(0, options.text_budget)
                           : text;
    }
    return node;
}

json slide_node(const PresentationDoc& doc, int slide_index, const ContextOptions& options) {
    const Slide& slide = doc.slides[static_cast<std::size_t>(slide_index)];
    json shapes = json::array();
    for (std::size_t i = 0; i < slide.shapes.size(); ++i) {
        shapes.push_back(shape_node(slide.shapes[i], static_cast<int>(i), options));
    }
    json node{{"index", slide_index}, {"shapes", std::move(shapes)}};
    if (slide.layout) node["layout"] = *slide.layout;
    return node;
}

void collect_pairs(const json& node, const std::string& path,
                   std::set<std::pair<std::string, std::string>>& out) {
    if (node.is_object()) {
        for (const char* key : kIdentifierKeys) {
            if (node.contains(key)) out.emplace(path, key);
        }
        for (const auto& [key, child] : node.items()) {
            if (child.is_array() || child.is_object()) {
                collect_pairs(child, path.empty() ? key : path + "." + key, out);
            }
        }
    } else if (node.is_array()) {
        for (std::size_t i = 0; i < node.size(); ++i) {
            collect_pairs(node[i], path + "[" + std::to_string(i) + "]", out);
        }
    }
}

}  // namespace

json extract_context(const PresentationDoc& doc, ContextScope scope, const ContextOptions& options) {
    json slides = json::array();
    if (scope == ContextScope::Presentation) {
        for (std::size_t i = 0; i < doc.slides.size(); ++i) {
            slides.push_back(slide_node(doc, static_cast<int>(i), options));
        }
    } else {
        // Selection scope: every slide touched by the selection, in order.
        std::vector<int> indices;
        for (const auto& p : doc.selection) {
            if (!p.slide) {
                indices.clear();
                for (std::size_t i = 0; i < doc.slides.size(); ++i) indices.push_back(static_cast<int>(i));
                break;
            }
            if (*p.slide >= 0 && static_cast<std::size_t>(*p.slide) < doc.slides.size())
                indices.push_back(*p.slide);
        }
        std::sort(indices.begin(), indices.end());
        indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
        for (int i : indices) slides.push_back(slide_node(doc, i, options));
    }
    return json{{"slides", std::move(slides)}};
}

std::set<std::pair<std::string, std::string>> context_identifier_pairs(const json& tree) {
    std::set<std::pair<std::string, std::string>> out;
    collect_pairs(tree, "", out);
    return out;
}

double context_similarity(const json& a, const json& b) {
    const auto pa = context_identifier_pairs(a);
    const auto pb = context_identifier_pairs(b);
    if (pa.empty() && pb.empty()) return 1.0;
    std::size_t inter = 0;
    for (const auto& p : pa) inter += pb.count(p);
    const std::size_t uni = pa.size() + pb.size() - inter;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace odsl::doc
