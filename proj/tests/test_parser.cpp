#include <doctest.h>

#include "odsl/lang/parser.hpp"
#include "odsl/lang/printer.hpp"
#include "odsl/lang/registry.hpp"

using namespace odsl;

TEST_CASE("single statement with binding and two arguments") {
    Program p = parse(R"(shape = select_shapes(shapeType="Triangle", index=1))");
    REQUIRE(p.statements.size() == 1);
    const Statement& s = p.statements[0];
    CHECK(s.binding == "shape");
    CHECK(s.name == "select_shapes");
    REQUIRE(s.args.size() == 2);
    CHECK(s.args[0].name == "shapeType");
    CHECK(s.args[0].value == Value::str("Triangle"));
    CHECK(s.args[1].name == "index");
    CHECK(s.args[1].value == Value::num(1));
}

TEST_CASE("empty source parses to empty program") {
    CHECK(parse("").statements.empty());
    CHECK(parse("\n\n").statements.empty());
    CHECK(parse("# only a comment\n").statements.empty());
}

TEST_CASE("literals are typed lexically") {
    Program p = parse("format_text(textRanges=t, bold=true, size=18, color=\"teal\")");
    const Statement& s = p.statements[0];
    CHECK(s.arg("textRanges")->kind == Value::Kind::VarRef);
    CHECK(s.arg("bold")->kind == Value::Kind::Boolean);
    CHECK(s.arg("size")->kind == Value::Kind::Number);
    CHECK(s.arg("color")->kind == Value::Kind::String);
}

TEST_CASE("hash inside a string literal is not a comment") {
    Program p = parse("format_shapes(shapes=s, lineColor=\"#964B00\") # trailing comment");
    CHECK(p.statements[0].arg("lineColor")->text == "#964B00");
}

TEST_CASE("statements keep source order and line numbers") {
    Program p = parse("a = select_slides()\n\n# comment\nb = select_shapes()\n");
    REQUIRE(p.statements.size() == 2);
    CHECK(p.statements[0].span.line == 1);
    CHECK(p.statements[1].span.line == 4);
}

TEST_CASE("malformed inputs raise ParseError with a position") {
    CHECK_THROWS_AS(parse("format_text(textRanges="), ParseError);
    CHECK_THROWS_AS(parse("f(a=1"), ParseError);
    CHECK_THROWS_AS(parse("f(a=\"unterminated)"), ParseError);
    CHECK_THROWS_AS(parse("f(1)"), ParseError);           // positional argument
    CHECK_THROWS_AS(parse("f(a 1)"), ParseError);         // missing '='
    CHECK_THROWS_AS(parse("x = = f()"), ParseError);      // malformed assignment
    CHECK_THROWS_AS(parse("f(a=1) trailing"), ParseError);
    CHECK_THROWS_AS(parse("f(a=1, a=2)"), ParseError);    // duplicate keyword

    try {
        parse("format_text(textRanges=");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.span().line == 1);
        CHECK(e.span().col > 1);
    }
}

TEST_CASE("negative and decimal numbers") {
    Program p = parse("format_shapes(shapes=s, top=-3.5, width=1e2)");
    CHECK(p.statements[0].arg("top")->number == doctest::Approx(-3.5));
    CHECK(p.statements[0].arg("width")->number == doctest::Approx(100.0));
}

TEST_CASE("argument order is immaterial for program equality") {
    Program a = parse("format_text(textRanges=t, bold=true, size=18)");
    Program b = parse("format_text(size=18, textRanges=t, bold=true)");
    CHECK(a == b);
    CHECK_FALSE(a.strict_equal(b));
}
