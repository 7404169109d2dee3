#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "odsl/lang/ast.hpp"
#include "odsl/lang/schema.hpp"

namespace odsl {

// One statement of an injection template. Argument values are literals,
// except var == "$binding" which resolves to the repaired statement's
// binding variable.
struct InjectionTemplateStatement {
    std::string name;
    std::vector<std::pair<std::string, Value>> args;
};

// Repair rule: when `statement`'s `param` carries the invalid enum value
// `value`, substitute `replace_with` and append the template statements.
struct InjectionRule {
    std::string statement;
    std::string param;
    std::string value;
    std::string replace_with;
    std::vector<InjectionTemplateStatement> append;
};

// Immutable statement-schema registry, plus the alias/injection/fuzzy data
// used by the code-correction layer. Loaded once, read concurrently.
class Registry {
public:
    static Registry from_json_text(std::string_view text);
    static Registry load_file(const std::string& path);
    // The compiled-in default registry (data/odsl_registry.json).
    static const Registry& builtin();

    const StatementSchema* lookup(std::string_view statement_name) const;
    const std::vector<StatementSchema>& statements() const { return schemas_; }

    const std::map<std::string, std::string>& aliases() const { return aliases_; }
    const std::vector<InjectionRule>& injections() const { return injections_; }
    const InjectionRule* injection_for(std::string_view statement, std::string_view param,
                                       std::string_view value) const;

    // Fuzzy enum matching accepts a candidate iff
    // distance <= ceil(len * numerator / denominator).
    int fuzzy_numerator() const { return fuzzy_num_; }
    int fuzzy_denominator() const { return fuzzy_den_; }

    int schema_version() const { return schema_version_; }

private:
    int schema_version_ = 0;
    std::vector<StatementSchema> schemas_;
    std::map<std::string, std::string> aliases_;
    std::vector<InjectionRule> injections_;
    int fuzzy_num_ = 1;
    int fuzzy_den_ = 3;
};

}  // namespace odsl
