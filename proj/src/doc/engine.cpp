#include "odsl/doc/engine.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <regex>
#include <set>

namespace odsl::doc {

using analysis::TypedProgram;
using analysis::TypedStatement;
using nlohmann::json;

json ActionRecord::to_json() const {
    return json{{"op", op}, {"path", path.to_json()}, {"args", args}};
}

ActionRecord ActionRecord::from_json(const json& j) {
    ActionRecord r;
    r.op = j.at("op").get<std::string>();
    r.path = EntityPath::from_json(j.at("path"));
    r.args = j.value("args", json::object());
    return r;
}

json ActionLog::to_json() const {
    json actions = json::array();
    for (const auto& r : records) actions.push_back(r.to_json());
    return json{{"formatVersion", 1}, {"actions", std::move(actions)}};
}

ActionLog ActionLog::from_json(const json& j) {
    ActionLog log;
    for (const auto& rj : j.value("actions", json::array()))
        log.records.push_back(ActionRecord::from_json(rj));
    return log;
}

ActionLog ActionLog::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("actions: cannot open " + path);
    return from_json(json::parse(in));
}

void ActionLog::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("actions: cannot write " + path);
    out << to_json().dump(2) << '\n';
}

Shape ImageProvider::make_image_shape(const std::string& description) const {
    Shape shape;
    shape.shape_type = "Image";
    shape.geometry = Geometry{100.0, 100.0, 240.0, 320.0};
    shape.text_range = TextRange{description, {}};
    return shape;
}

const ImageProvider& ImageProvider::placeholder() {
    static const ImageProvider provider;
    return provider;
}

namespace {

struct EntityList {
    EntityType type = EntityType::Shapes;
    std::vector<EntityPath> paths;
};

double number_arg(const json& args, const char* key, double fallback) {
    return args.contains(key) ? args.at(key).get<double>() : fallback;
}

std::string unique_shape_name(const Slide& slide, const std::string& base) {
    for (int n = 1;; ++n) {
        std::string candidate = base + " " + std::to_string(n);
        if (slide.shape(candidate) == nullptr) return candidate;
    }
}

// Applies one record. This is the single mutation path shared by execute
// and replay, which is what keeps the two bit-identical.
void apply_record(PresentationDoc& doc, const ActionRecord& r, const ImageProvider& images) {
    const auto slide_of = [&](const EntityPath& p) -> Slide* {
        if (!p.slide || *p.slide < 0 || static_cast<std::size_t>(*p.slide) >= doc.slides.size())
            return nullptr;
        return &doc.slides[static_cast<std::size_t>(*p.slide)];
    };

    if (r.op == "insert_slides") {
        Slide slide;
        if (r.args.contains("layout")) slide.layout = r.args.at("layout").get<std::string>();
        const int pos = std::clamp(r.path.slide.value_or(static_cast<int>(doc.slides.size())), 0,
                                   static_cast<int>(doc.slides.size()));
        doc.slides.insert(doc.slides.begin() + pos, std::move(slide));
    } else if (r.op == "insert_shapes") {
        if (Slide* slide = slide_of(r.path); slide != nullptr && r.path.shape) {
            Shape shape;
            shape.name = *r.path.shape;
            shape.shape_type = r.args.value("shapeType", "Rectangle");
            if (shape.shape_type == "Textbox") shape.text_range = TextRange{};
            slide->shapes.push_back(std::move(shape));
        }
    } else if (r.op == "insert_images") {
        if (Slide* slide = slide_of(r.path); slide != nullptr && r.path.shape) {
            Shape shape = images.make_image_shape(r.args.value("description", ""));
            shape.name = *r.path.shape;
            slide->shapes.push_back(std::move(shape));
        }
    } else if (r.op == "insert_text") {
        if (Shape* shape = doc.resolve_shape(r.path)) {
            const std::string text = r.args.value("text", "");
            if (!shape->text_range) {
                shape->text_range = TextRange{text, {}};
            } else if (shape->text_range->text.empty()) {
                shape->text_range->text = text;
            } else {
                shape->text_range->text += "\n" + text;
            }
        }
    } else if (r.op == "format_slides") {
        if (Slide* slide = slide_of(r.path)) {
            if (r.args.contains("layout")) slide->layout = r.args.at("layout").get<std::string>();
        }
    } else if (r.op == "format_shapes") {
        if (Shape* shape = doc.resolve_shape(r.path)) {
            const json& a = r.args;
            if (a.contains("fillColor")) shape->fill.color = a.at("fillColor").get<std::string>();
            if (a.contains("fillTransparency"))
                shape->fill.transparency = a.at("fillTransparency").get<double>();
            if (a.contains("lineColor")) shape->line.color = a.at("lineColor").get<std::string>();
            if (a.contains("lineTransparency"))
                shape->line.transparency = a.at("lineTransparency").get<double>();
            shape->geometry.top = number_arg(a, "top", shape->geometry.top);
            shape->geometry.left = number_arg(a, "left", shape->geometry.left);
            shape->geometry.height = number_arg(a, "height", shape->geometry.height);
            shape->geometry.width = number_arg(a, "width", shape->geometry.width);
        }
    } else if (r.op == "format_text") {
        if (Shape* shape = doc.resolve_shape(r.path)) {
            if (!shape->text_range) shape->text_range = TextRange{};
            TextStyle& style = shape->text_range->style;
            const json& a = r.args;
            if (a.contains("bold")) style.bold = a.at("bold").get<bool>();
            if (a.contains("italic")) style.italic = a.at("italic").get<bool>();
            if (a.contains("fontName")) style.font_name = a.at("fontName").get<std::string>();
            if (a.contains("size")) style.size = a.at("size").get<double>();
            if (a.contains("color")) style.color = a.at("color").get<std::string>();
            if (a.contains("underline")) style.underline = a.at("underline").get<std::string>();
            if (a.contains("horizontalAlignment"))
                style.horizontal_alignment = a.at("horizontalAlignment").get<std::string>();
            if (a.contains("bulleted")) style.bulleted = a.at("bulleted").get<bool>();
        }
    } else if (r.op == "delete_slides") {
        if (r.path.slide && *r.path.slide >= 0 &&
            static_cast<std::size_t>(*r.path.slide) < doc.slides.size()) {
            doc.slides.erase(doc.slides.begin() + *r.path.slide);
        }
    } else if (r.op == "delete_shapes") {
        if (Slide* slide = slide_of(r.path); slide != nullptr && r.path.shape) {
            slide->shapes.erase(std::remove_if(slide->shapes.begin(), slide->shapes.end(),
                                               [&](const Shape& s) { return s.name == *r.path.shape; }),
                                slide->shapes.end());
        }
    } else if (r.op == "delete_text") {
        if (Shape* shape = doc.resolve_shape(r.path)) {
            if (shape->text_range) shape->text_range->text.clear();
        }
    }
    doc.prune_selection();
}

bool is_blank_textbox(const Shape& shape) {
    return shape.shape_type == "Textbox" &&
           (!shape.text_range || shape.text_range->text.empty());
}

bool text_matches(const std::string& content, const std::string& pattern) {
    if (pattern.size() >= 2 && pattern.front() == '/' && pattern.back() == '/') {
        try {
            std::regex re(pattern.substr(1, pattern.size() - 2));
            return std::regex_search(content, re);
        } catch (const std::regex_error&) {
            return false;
        }
    }
    return content.find(pattern) != std::string::npos;
}

class Engine {
public:
    Engine(PresentationDoc doc, const ImageProvider& images)
        : doc_(std::move(doc)), images_(images) {}

    ExecResult run(const TypedProgram& tp) {
        for (const auto& ts : tp.statements) exec_statement(ts);
        ExecResult result;
        result.doc = std::move(doc_);
        result.log = std::move(log_);
        for (const auto& [name, list] : env_) result.env[name] = list.paths;
        return result;
    }

private:
    void exec_statement(const TypedStatement& ts) {
        if (ts.schema == nullptr) return;  // only checked programs reach the engine
        const StatementSchema& schema = *ts.schema;
        EntityList result;
        result.type = schema.returns.value_or(schema.target);

        switch (schema.family) {
            case StatementFamily::Select:
                result = eval_select(ts);
                break;
            case StatementFamily::Insert:
            case StatementFamily::Delegation:
                result = eval_insert(ts);
                break;
            case StatementFamily::Format:
                eval_format(ts);
                break;
            case StatementFamily::Delete:
                eval_delete(ts);
                break;
        }

        if (ts.statement.binding && schema.returns) env_[*ts.statement.binding] = result;
    }

    void emit(ActionRecord record) {
        apply_record(doc_, record, images_);
        log_.records.push_back(std::move(record));
    }

    // ---- scope resolution -------------------------------------------------

    std::vector<EntityPath> resolve_scope(const Value* scope) const {
        if (scope == nullptr) return doc_.selection;
        if (scope->kind == Value::Kind::VarRef) {
            auto it = env_.find(scope->text);
            return it == env_.end() ? std::vector<EntityPath>{} : it->second.paths;
        }
        if (scope->kind == Value::Kind::String) {
            if (scope->text == kScopePresentation) return {EntityPath::presentation()};
            if (scope->text == kScopeSelection) return doc_.selection;
        }
        return {};
    }

    // Entities of `target` type contained in (or equal to) the scope
    // entities, in document order.
    std::vector<EntityPath> candidates(EntityType target,
                                       const std::vector<EntityPath>& scope) const {
        std::set<EntityPath> included;
        const auto add_slide_children = [&](int slide_index) {
            const Slide& slide = doc_.slides[static_cast<std::size_t>(slide_index)];
            if (target == EntityType::Slides) {
                included.insert(EntityPath::of_slide(slide_index));
                return;
            }
            for (const auto& shape : slide.shapes) {
                if (target == EntityType::TextRanges && !shape.text_range) continue;
                included.insert(EntityPath::of_shape(slide_index, shape.name));
            }
        };

        for (const auto& p : scope) {
            if (!p.slide) {
                for (std::size_t i = 0; i < doc_.slides.size(); ++i)
                    add_slide_children(static_cast<int>(i));
                continue;
            }
            if (*p.slide < 0 || static_cast<std::size_t>(*p.slide) >= doc_.slides.size()) continue;
            if (!p.shape) {
                add_slide_children(*p.slide);
                continue;
            }
            if (target == EntityType::Slides) continue;
            const Shape* shape = doc_.resolve_shape(p);
            if (shape == nullptr) continue;
            if (target == EntityType::TextRanges && !shape->text_range) continue;
            included.insert(p);
        }

        // Emit in document order.
        std::vector<EntityPath> out;
        if (target == EntityType::Slides) {
            for (std::size_t i = 0; i < doc_.slides.size(); ++i) {
                EntityPath p = EntityPath::of_slide(static_cast<int>(i));
                if (included.count(p)) out.push_back(p);
            }
        } else {
            for (std::size_t i = 0; i < doc_.slides.size(); ++i) {
                for (const auto& shape : doc_.slides[i].shapes) {
                    EntityPath p = EntityPath::of_shape(static_cast<int>(i), shape.name);
                    if (included.count(p)) out.push_back(p);
                }
            }
        }
        return out;
    }

    // ---- select -----------------------------------------------------------

    EntityList eval_select(const TypedStatement& ts) {
        const StatementSchema& schema = *ts.schema;
        EntityList result;
        result.type = *schema.returns;
        std::vector<EntityPath> items = candidates(schema.target, resolve_scope(ts.statement.arg("scope")));

        for (const auto& arg : ts.statement.args) {
            if (arg.name == "scope" || arg.name == "index") continue;
            items = filter_by(schema.target, items, arg.name, arg.value);
        }

        if (const Value* index = ts.statement.arg("index"); index != nullptr) {
            items = pick_index(items, index->number);
        }

        result.paths = std::move(items);
        return result;
    }

    std::vector<EntityPath> filter_by(EntityType target, const std::vector<EntityPath>& items,
                                      const std::string& param, const Value& value) const {
        std::vector<EntityPath> out;
        for (const auto& p : items) {
            if (matches(target, p, param, value)) out.push_back(p);
        }
        return out;
    }

    bool matches(EntityType target, const EntityPath& p, const std::string& param,
                 const Value& value) const {
        if (target == EntityType::Slides) {
            const Slide& slide = doc_.slides[static_cast<std::size_t>(*p.slide)];
            if (param == "layout")
                return slide.layout && value.kind == Value::Kind::String && *slide.layout == value.text;
            return false;  // slides carry no other identifiers
        }
        const Shape* shape = doc_.resolve_shape(p);
        if (shape == nullptr) return false;
        if (param == "name") return value.kind == Value::Kind::String && shape->name == value.text;
        if (target == EntityType::Shapes && param == "shapeType")
            return value.kind == Value::Kind::String && shape->shape_type == value.text;
        if (target == EntityType::TextRanges && param == "text")
            return value.kind == Value::Kind::String && shape->text_range &&
                   text_matches(shape->text_range->text, value.text);
        return false;
    }

    static std::vector<EntityPath> pick_index(const std::vector<EntityPath>& items, double index) {
        if (index < 0 || index != std::floor(index)) return {};
        const auto i = static_cast<std::size_t>(index);
        if (i >= items.size()) return {};
        return {items[i]};
    }

    // ---- insert -----------------------------------------------------------

    EntityList eval_insert(const TypedStatement& ts) {
        const std::string& name = ts.schema->name;
        if (name == "insert_slides") return insert_slides(ts);
        if (name == "insert_shapes") return insert_shapes(ts);
        if (name == "insert_text") return insert_text(ts);
        if (name == "insert_images") return insert_images(ts);
        return EntityList{ts.schema->returns.value_or(ts.schema->target), {}};
    }

    std::vector<int> slide_indices_of(const Value* v) const {
        std::vector<int> out;
        if (v == nullptr || v->kind != Value::Kind::VarRef) return out;
        auto it = env_.find(v->text);
        if (it == env_.end()) return out;
        for (const auto& p : it->second.paths) {
            if (p.slide && !p.shape && *p.slide >= 0 &&
                static_cast<std::size_t>(*p.slide) < doc_.slides.size()) {
                out.push_back(*p.slide);
            }
        }
        return out;
    }

    EntityList insert_slides(const TypedStatement& ts) {
        EntityList result{EntityType::Slides, {}};
        const Value* layout = ts.statement.arg("layout");
        json args = json::object();
        if (layout != nullptr && layout->kind == Value::Kind::String) args["layout"] = layout->text;

        if (ts.statement.arg("precededBy") == nullptr) {
            const int pos = static_cast<int>(doc_.slides.size());
            emit(ActionRecord{"insert_slides", EntityPath::of_slide(pos), args});
            result.paths.push_back(EntityPath::of_slide(pos));
            return result;
        }

        std::vector<int> anchors = slide_indices_of(ts.statement.arg("precededBy"));
        std::sort(anchors.begin(), anchors.end());
        anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
        int offset = 0;
        for (int anchor : anchors) {
            const int pos = anchor + 1 + offset;
            emit(ActionRecord{"insert_slides", EntityPath::of_slide(pos), args});
            result.paths.push_back(EntityPath::of_slide(pos));
            ++offset;
        }
        return result;
    }

    EntityList insert_shapes(const TypedStatement& ts) {
        EntityList result{EntityType::Shapes, {}};
        const Value* type_arg = ts.statement.arg("shapeType");
        const std::string shape_type =
            type_arg != nullptr && type_arg->kind == Value::Kind::String ? type_arg->text
                                                                         : "Rectangle";
        for (int slide_index : slide_indices_of(ts.statement.arg("slides"))) {
            const std::string name =
                unique_shape_name(doc_.slides[static_cast<std::size_t>(slide_index)], shape_type);
            EntityPath p = EntityPath::of_shape(slide_index, name);
            emit(ActionRecord{"insert_shapes", p, json{{"shapeType", shape_type}}});
            result.paths.push_back(std::move(p));
        }
        return result;
    }

    EntityList insert_text(const TypedStatement& ts) {
        EntityList result{EntityType::TextRanges, {}};
        const Value* text_arg = ts.statement.arg("text");
        const std::string text =
            text_arg != nullptr && text_arg->kind == Value::Kind::String ? text_arg->text : "";

        std::vector<EntityPath> targets;
        if (const Value* shapes = ts.statement.arg("shapes"); shapes != nullptr) {
            for (const auto& p : resolve_scope(shapes)) {
                if (doc_.resolve_shape(p) != nullptr) targets.push_back(p);
            }
        } else {
            // No explicit target: the first blank textbox in the current
            // selection, else a fresh textbox on the selection's slide.
            for (const auto& p : candidates(EntityType::Shapes, doc_.selection)) {
                const Shape* shape = doc_.resolve_shape(p);
                if (shape != nullptr && is_blank_textbox(*shape)) {
                    targets.push_back(p);
                    break;
                }
            }
            if (targets.empty()) {
                auto slides = candidates(EntityType::Slides, doc_.selection);
                if (!slides.empty()) {
                    const int slide_index = *slides.front().slide;
                    const std::string name = unique_shape_name(
                        doc_.slides[static_cast<std::size_t>(slide_index)], "Textbox");
                    EntityPath p = EntityPath::of_shape(slide_index, name);
                    emit(ActionRecord{"insert_shapes", p, json{{"shapeType", "Textbox"}}});
                    targets.push_back(std::move(p));
                }
            }
        }

        for (const auto& p : targets) {
            emit(ActionRecord{"insert_text", p, json{{"text", text}}});
            result.paths.push_back(p);
        }
        return result;
    }

    EntityList insert_images(const TypedStatement& ts) {
        EntityList result{EntityType::Shapes, {}};
        const Value* desc = ts.statement.arg("description");
        const std::string description =
            desc != nullptr && desc->kind == Value::Kind::String ? desc->text : "";
        for (int slide_index : slide_indices_of(ts.statement.arg("slides"))) {
            const std::string name =
                unique_shape_name(doc_.slides[static_cast<std::size_t>(slide_index)], "Image");
            EntityPath p = EntityPath::of_shape(slide_index, name);
            emit(ActionRecord{"insert_images", p, json{{"description", description}}});
            result.paths.push_back(std::move(p));
        }
        return result;
    }

    // ---- format / delete --------------------------------------------------

    const ParamSpec* entity_param(const StatementSchema& schema) const {
        for (const auto& p : schema.params) {
            if (p.kind == ParamKind::EntityRef) return &p;
        }
        return nullptr;
    }

    std::vector<EntityPath> entity_targets(const TypedStatement& ts) const {
        const ParamSpec* param = entity_param(*ts.schema);
        if (param == nullptr) return {};
        const Value* v = ts.statement.arg(param->name);
        if (v == nullptr || v->kind != Value::Kind::VarRef) return {};
        auto it = env_.find(v->text);
        if (it == env_.end()) return {};
        std::vector<EntityPath> out;
        for (const auto& p : it->second.paths) {
            if (ts.schema->target == EntityType::Slides) {
                if (p.slide && !p.shape && *p.slide >= 0 &&
                    static_cast<std::size_t>(*p.slide) < doc_.slides.size())
                    out.push_back(p);
            } else {
                const Shape* shape = doc_.resolve_shape(p);
                if (shape == nullptr) continue;
                if (ts.schema->target == EntityType::TextRanges && !shape->text_range) continue;
                out.push_back(p);
            }
        }
        return out;
    }

    void eval_format(const TypedStatement& ts) {
        const ParamSpec* entity = entity_param(*ts.schema);
        json args = json::object();
        for (const auto& arg : ts.statement.args) {
            if (entity != nullptr && arg.name == entity->name) continue;
            switch (arg.value.kind) {
                case Value::Kind::Number: args[arg.name] = arg.value.number; break;
                case Value::Kind::String: args[arg.name] = arg.value.text; break;
                case Value::Kind::Boolean: args[arg.name] = arg.value.boolean; break;
                case Value::Kind::VarRef: break;
            }
        }
        if (args.empty()) return;  // nothing to change
        for (const auto& p : entity_targets(ts)) {
            emit(ActionRecord{ts.schema->name, p, args});
        }
    }

    void eval_delete(const TypedStatement& ts) {
        std::vector<EntityPath> targets = entity_targets(ts);
        if (ts.schema->target == EntityType::Slides) {
            // Descending order keeps every record's index valid when the
            // log is replayed one record at a time.
            std::sort(targets.begin(), targets.end(),
                      [](const EntityPath& a, const EntityPath& b) { return b < a; });
        }
        for (const auto& p : targets) {
            emit(ActionRecord{ts.schema->name, p, json::object()});
        }
    }

    PresentationDoc doc_;
    const ImageProvider& images_;
    ActionLog log_;
    std::map<std::string, EntityList> env_;
};

}  // namespace

ExecResult execute(const TypedProgram& tp, const PresentationDoc& doc, const ExecOptions& options) {
    const ImageProvider& images =
        options.image_provider != nullptr ? *options.image_provider : ImageProvider::placeholder();
    return Engine(doc, images).run(tp);
}

ActionLog transpile(const TypedProgram& tp, const PresentationDoc& doc, const ExecOptions& options) {
    return execute(tp, doc, options).log;
}

PresentationDoc replay(const ActionLog& log, const PresentationDoc& pre, const ExecOptions& options) {
    const ImageProvider& images =
        options.image_provider != nullptr ? *options.image_provider : ImageProvider::placeholder();
    PresentationDoc doc = pre;
    for (const auto& record : log.records) apply_record(doc, record, images);
    return doc;
}

std::vector<std::string> undoability_audit(const ActionLog& log, const Registry& registry) {
    std::vector<std::string> violations;
    for (const auto& record : log.records) {
        if (registry.lookup(record.op) == nullptr) {
            violations.push_back("op '" + record.op + "' is not a reversible registered statement");
        }
    }
    return violations;
}

}  // namespace odsl::doc
