#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "odsl/lang/ast.hpp"

namespace odsl {

class ParseError : public std::runtime_error {
public:
    ParseError(Span span, const std::string& message)
        : std::runtime_error("parse error at " + std::to_string(span.line) + ":" +
                             std::to_string(span.col) + ": " + message),
          span_(span),
          message_(message) {}

    Span span() const { return span_; }
    const std::string& detail() const { return message_; }

private:
    Span span_;
    std::string message_;
};

// Parses ODSL source: one statement per line, `#` starts a comment, keyword
// arguments only. Throws ParseError on the first malformed line; never
// resolves statement names (that is the checker's job).
Program parse(std::string_view source);

}  // namespace odsl
