#include "odsl/lang/registry.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "odsl/support/assets.hpp"

namespace odsl {
namespace {

using nlohmann::json;

ParamKind param_kind_from(const std::string& s) {
    if (s == "number") return ParamKind::Number;
    if (s == "string") return ParamKind::String;
    if (s == "boolean") return ParamKind::Boolean;
    if (s == "ranged") return ParamKind::RangedNumber;
    if (s == "stringOrRegex") return ParamKind::StringOrRegex;
    if (s == "enum") return ParamKind::Enum;
    if (s == "entity") return ParamKind::EntityRef;
    if (s == "scope") return ParamKind::ScopeRef;
    throw std::runtime_error("registry: unknown param type '" + s + "'");
}

StatementFamily family_from(const std::string& s) {
    if (s == "select") return StatementFamily::Select;
    if (s == "insert") return StatementFamily::Insert;
    if (s == "format") return StatementFamily::Format;
    if (s == "delete") return StatementFamily::Delete;
    if (s == "delegation") return StatementFamily::Delegation;
    throw std::runtime_error("registry: unknown statement family '" + s + "'");
}

EntityType entity_from(const std::string& s) {
    auto t = entity_type_from_name(s);
    if (!t) throw std::runtime_error("registry: unknown entity type '" + s + "'");
    return *t;
}

Value template_arg_value(const json& a) {
    if (a.contains("var")) return Value::var(a.at("var").get<std::string>());
    if (a.contains("number")) return Value::num(a.at("number").get<double>());
    if (a.contains("string")) return Value::str(a.at("string").get<std::string>());
    if (a.contains("boolean")) return Value::boolean_v(a.at("boolean").get<bool>());
    throw std::runtime_error("registry: injection arg needs var/number/string/boolean");
}

}  // namespace

Registry Registry::from_json_text(std::string_view text) {
    json root = json::parse(text);
    Registry reg;
    reg.schema_version_ = root.at("schemaVersion").get<int>();

    std::map<std::string, std::vector<std::string>> enums;
    for (const auto& [name, values] : root.at("enums").items()) {
        std::vector<std::string> vals = values.get<std::vector<std::string>>();
        std::set<std::string> uniq(vals.begin(), vals.end());
        if (uniq.size() != vals.size())
            throw std::runtime_error("registry: duplicate values in enum '" + name + "'");
        enums[name] = std::move(vals);
    }

    for (const auto& st : root.at("statements")) {
        StatementSchema schema;
        schema.name = st.at("name").get<std::string>();
        schema.family = family_from(st.at("family").get<std::string>());
        schema.target = entity_from(st.at("target").get<std::string>());
        if (st.contains("returns")) schema.returns = entity_from(st.at("returns").get<std::string>());

        for (const auto& p : st.at("params")) {
            ParamSpec spec;
            spec.name = p.at("name").get<std::string>();
            spec.kind = param_kind_from(p.at("type").get<std::string>());
            spec.required = p.value("required", false);
            spec.free_form = p.value("freeForm", false);
            if (spec.kind == ParamKind::RangedNumber) {
                spec.lo = p.at("lo").get<double>();
                spec.hi = p.at("hi").get<double>();
                if (!(spec.lo < spec.hi))
                    throw std::runtime_error("registry: ranged param '" + spec.name +
                                             "' needs lo < hi");
            }
            if (spec.kind == ParamKind::Enum) {
                spec.enum_name = p.at("enum").get<std::string>();
                auto it = enums.find(spec.enum_name);
                if (it == enums.end())
                    throw std::runtime_error("registry: undeclared enum '" + spec.enum_name + "'");
                spec.enum_values = it->second;
            }
            if (spec.kind == ParamKind::EntityRef) spec.entity = entity_from(p.at("entity").get<std::string>());
            if (spec.kind == ParamKind::ScopeRef) spec.default_str = p.value("default", "Selection");
            schema.params.push_back(std::move(spec));
        }
        reg.schemas_.push_back(std::move(schema));
    }

    if (root.contains("aliases")) {
        for (const auto& [from, to] : root.at("aliases").items()) {
            reg.aliases_[from] = to.get<std::string>();
        }
    }

    if (root.contains("injections")) {
        for (const auto& inj : root.at("injections")) {
            InjectionRule rule;
            rule.statement = inj.at("statement").get<std::string>();
            rule.param = inj.at("param").get<std::string>();
            rule.value = inj.at("value").get<std::string>();
            rule.replace_with = inj.at("replaceWith").get<std::string>();
            for (const auto& t : inj.at("append")) {
                InjectionTemplateStatement stmt;
                stmt.name = t.at("name").get<std::string>();
                for (const auto& a : t.at("args")) {
                    stmt.args.emplace_back(a.at("name").get<std::string>(), template_arg_value(a));
                }
                rule.append.push_back(std::move(stmt));
            }
            reg.injections_.push_back(std::move(rule));
        }
    }

    if (root.contains("fuzzy")) {
        reg.fuzzy_num_ = root.at("fuzzy").value("maxDistanceNumerator", 1);
        reg.fuzzy_den_ = root.at("fuzzy").value("maxDistanceDenominator", 3);
    }

    return reg;
}

Registry Registry::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("registry: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

const Registry& Registry::builtin() {
    static const Registry reg = from_json_text(assets::default_registry());
    return reg;
}

const StatementSchema* Registry::lookup(std::string_view statement_name) const {
    for (const auto& s : schemas_) {
        if (s.name == statement_name) return &s;
    }
    return nullptr;
}

const InjectionRule* Registry::injection_for(std::string_view statement, std::string_view param,
                                             std::string_view value) const {
    for (const auto& rule : injections_) {
        if (rule.statement == statement && rule.param == param && rule.value == value) return &rule;
    }
    return nullptr;
}

}  // namespace odsl
