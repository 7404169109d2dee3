#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace odsl {

// 1-based source position.
struct Span {
    int line = 0;
    int col = 0;
};

// An argument value: a literal (number/string/boolean) or a reference to a
// variable bound earlier in the program. The special scope arguments
// "Presentation" and "Selection" are ordinary String literals lexically; the
// checker gives them their scope meaning.
struct Value {
    enum class Kind { Number, String, Boolean, VarRef };

    Kind kind = Kind::String;
    double number = 0.0;
    std::string text;  // String payload, or the referenced variable name
    bool boolean = false;

    static Value num(double v);
    static Value str(std::string s);
    static Value boolean_v(bool b);
    static Value var(std::string name);

    bool operator==(const Value& other) const;
};

inline constexpr std::string_view kScopePresentation = "Presentation";
inline constexpr std::string_view kScopeSelection = "Selection";

// True for a String literal naming one of the two special scopes.
bool is_special_scope(const Value& v);

struct Argument {
    std::string name;
    Value value;
    Span span;
};

struct Statement {
    std::optional<std::string> binding;
    std::string name;
    std::vector<Argument> args;  // source order; names unique
    Span span;

    const Value* arg(std::string_view param) const;

    // Structural equality. Argument order is immaterial (arguments are a
    // keyword map); spans are metadata and never compared.
    bool operator==(const Statement& other) const;

    // Order- and spelling-sensitive equality, used for Exact match grading.
    bool strict_equal(const Statement& other) const;
};

struct Program {
    std::vector<Statement> statements;

    bool operator==(const Program& other) const;
    bool strict_equal(const Program& other) const;
    bool empty() const { return statements.empty(); }
};

}  // namespace odsl
