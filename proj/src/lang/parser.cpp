#include "odsl/lang/parser.hpp"

#include <cctype>
#include <cstdlib>
#include <string>

namespace odsl {
namespace {

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Scanner over one logical line.
class LineScanner {
public:
    LineScanner(std::string_view text, int line) : text_(text), line_(line) {}

    Span here() const { return Span{line_, static_cast<int>(pos_) + 1}; }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size() || text_[pos_] == '#';
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool consume(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        skip_ws();
        if (!consume(c)) fail(std::string("expected '") + c + "' " + what);
    }

    std::string ident() {
        skip_ws();
        if (!ident_start(peek())) fail("expected identifier");
        std::size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    bool looks_like_ident() {
        skip_ws();
        return ident_start(peek());
    }

    Value value() {
        skip_ws();
        const char c = peek();
        if (c == '"') return string_literal();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.')
            return number_literal();
        if (ident_start(c)) {
            const Span at = here();
            std::string word = ident();
            if (word == "true") return Value::boolean_v(true);
            if (word == "false") return Value::boolean_v(false);
            (void)at;
            return Value::var(std::move(word));
        }
        fail("expected a value (string, number, boolean or variable)");
        return Value{};
    }

    [[noreturn]] void fail(const std::string& message) { throw ParseError(here(), message); }

private:
    Value string_literal() {
        ++pos_;  // opening quote
        std::string out;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '"') {
                ++pos_;
                return Value::str(std::move(out));
            }
            if (c == '\\' && pos_ + 1 < text_.size()) {
                char next = text_[pos_ + 1];
                switch (next) {
                    case 'n': out += '\n'; break;
                    case 't': out += '\t'; break;
                    default: out += next; break;
                }
                pos_ += 2;
                continue;
            }
            out += c;
            ++pos_;
        }
        fail("unterminated string literal");
    }

    Value number_literal() {
        std::size_t start = pos_;
        if (peek() == '-' || peek() == '+') ++pos_;
        bool any_digit = false;
        auto digits = [&] {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
                any_digit = true;
            }
        };
        digits();
        if (peek() == '.') {
            ++pos_;
            digits();
        }
        if (peek() == 'e' || peek() == 'E') {
            ++pos_;
            if (peek() == '-' || peek() == '+') ++pos_;
            digits();
        }
        if (!any_digit) {
            pos_ = start;
            fail("malformed number literal");
        }
        std::string token(text_.substr(start, pos_ - start));
        return Value::num(std::strtod(token.c_str(), nullptr));
    }

    std::string_view text_;
    int line_;
    std::size_t pos_ = 0;
};

Statement parse_statement_line(std::string_view line_text, int line_no) {
    LineScanner sc(line_text, line_no);
    Statement stmt;
    stmt.span = sc.here();
    sc.skip_ws();
    stmt.span = sc.here();

    if (!sc.looks_like_ident()) sc.fail("expected a statement or binding");
    std::string first = sc.ident();

    if (sc.consume('=')) {
        stmt.binding = std::move(first);
        if (!sc.looks_like_ident()) sc.fail("expected statement name after '='");
        stmt.name = sc.ident();
    } else {
        stmt.name = std::move(first);
    }

    sc.expect('(', "after statement name");

    if (!sc.consume(')')) {
        while (true) {
            sc.skip_ws();
            if (!sc.looks_like_ident())
                sc.fail("arguments must be keyword=value pairs");
            Argument arg;
            arg.span = sc.here();
            arg.name = sc.ident();
            sc.skip_ws();
            if (!sc.consume('='))
                sc.fail("missing '=' between parameter '" + arg.name + "' and its value");
            sc.skip_ws();
            arg.span = sc.here();
            arg.value = sc.value();
            if (stmt.arg(arg.name) != nullptr)
                throw ParseError(arg.span, "duplicate argument '" + arg.name + "'");
            stmt.args.push_back(std::move(arg));
            if (sc.consume(',')) continue;
            if (sc.consume(')')) break;
            sc.fail("expected ',' or ')' in argument list");
        }
    }

    if (!sc.at_end()) sc.fail("unexpected text after statement");
    return stmt;
}

}  // namespace

Program parse(std::string_view source) {
    Program program;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= source.size()) {
        std::size_t eol = source.find('\n', pos);
        std::string_view line = eol == std::string_view::npos
                                    ? source.substr(pos)
                                    : source.substr(pos, eol - pos);
        ++line_no;

        // Strip the comment part, honoring quotes ("#964B00" is not a comment).
        bool in_string = false;
        std::size_t cut = line.size();
        for (std::size_t i = 0; i < line.size(); ++i) {
            char c = line[i];
            if (c == '\\' && in_string) {
                ++i;
                continue;
            }
            if (c == '"') in_string = !in_string;
            if (c == '#' && !in_string) {
                cut = i;
                break;
            }
        }
        std::string_view code = line.substr(0, cut);

        bool blank = true;
        for (char c : code) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                blank = false;
                break;
            }
        }
        if (!blank) program.statements.push_back(parse_statement_line(code, line_no));

        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return program;
}

}  // namespace odsl
