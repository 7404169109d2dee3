#include <doctest.h>

#include <random>
#include <set>

#include "odsl/analysis/checker.hpp"
#include "odsl/eval/normalize.hpp"
#include "odsl/lang/parser.hpp"
#include "odsl/lang/printer.hpp"
#include "support/generators.hpp"

using namespace odsl;
using eval::normalize_program;

namespace {

const Registry& reg() {
    return Registry::builtin();
}

std::string norm_text(const std::string& source, bool desensitize = true) {
    return pretty_print(normalize_program(parse(source), reg(), desensitize), reg());
}

}  // namespace

TEST_CASE("two orderings of independent statements normalize identically") {
    const std::string a =
        "text = select_text()\n"
        "format_text(textRanges=text, bold=true)\n"
        "format_text(textRanges=text, italic=true)\n";
    const std::string b =
        "t = select_text(scope=\"Selection\")\n"
        "format_text(textRanges=t, italic=true)\n"
        "format_text(textRanges=t, bold=true)\n";
    CHECK(norm_text(a) == norm_text(b));
    CHECK(normalize_program(parse(a), reg(), true)
              .strict_equal(normalize_program(parse(b), reg(), true)));
}

TEST_CASE("variables rename to v1, v2 in definition order; args take schema order") {
    const std::string source =
        "mySlides = select_slides(scope=\"Presentation\")\n"
        "box = insert_shapes(shapeType=\"Textbox\", slides=mySlides)\n";
    CHECK(norm_text(source, false) ==
          "v1 = select_slides(scope=\"Presentation\")\n"
          "v2 = insert_shapes(slides=v1, shapeType=\"Textbox\")\n");
}

TEST_CASE("normalization is idempotent") {
    const char* sources[] = {
        "text = select_text()\nformat_text(textRanges=text, bold=true)\n",
        "s = select_slides(scope=\"Presentation\")\n"
        "i = insert_images(slides=s, description=\"A dog\")\n"
        "format_shapes(shapes=i, top=10, left=20)\n",
    };
    for (const char* source : sources) {
        for (bool desensitize : {false, true}) {
            Program once = normalize_program(parse(source), reg(), desensitize);
            Program twice = normalize_program(once, reg(), desensitize);
            CHECK(once.strict_equal(twice));
        }
    }
}

TEST_CASE("desensitization equates free-form strings and geometry numbers") {
    const std::string a =
        "s = select_slides()\n"
        "insert_images(slides=s, description=\"A man walking a dog.\")\n";
    const std::string b =
        "x = select_slides()\n"
        "insert_images(slides=x, description=\"A watercolor sunset\")\n";
    CHECK(norm_text(a, true) == norm_text(b, true));
    CHECK(norm_text(a, false) != norm_text(b, false));

    const std::string g1 = "s = select_shapes()\nformat_shapes(shapes=s, top=10, width=300)\n";
    const std::string g2 = "s = select_shapes()\nformat_shapes(shapes=s, top=99, width=17)\n";
    CHECK(norm_text(g1, true) == norm_text(g2, true));
    CHECK(norm_text(g1, false) != norm_text(g2, false));
}

TEST_CASE("select filters are not desensitized") {
    const std::string a = "t = select_text(text=\"Hello\")\ndelete_text(textRanges=t)\n";
    const std::string b = "t = select_text(text=\"Goodbye\")\ndelete_text(textRanges=t)\n";
    CHECK(norm_text(a, true) != norm_text(b, true));
}

TEST_CASE("dependent statements never cross their definitions") {
    const std::string source =
        "z = select_slides(scope=\"Presentation\")\n"
        "a = insert_shapes(slides=z, shapeType=\"Ellipse\")\n"
        "format_shapes(shapes=a, fillColor=\"teal\")\n";
    Program n = normalize_program(parse(source), reg(), false);
    REQUIRE(n.statements.size() == 3);
    CHECK(n.statements[0].name == "select_slides");
    CHECK(n.statements[1].name == "insert_shapes");
    CHECK(n.statements[2].name == "format_shapes");
}

TEST_CASE("canonicalization preserves check-validity and the entity environment") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        Program p = testutil::random_valid_program(rng);
        auto before = analysis::check(p, reg());
        REQUIRE(before.ok());

        Program n = normalize_program(p, reg(), false);
        auto after = analysis::check(n, reg());
        CHECK(after.ok());
        // Same multiset of entity types, names aside.
        std::multiset<EntityType> lhs, rhs;
        for (const auto& [name, type] : before.typed.env) lhs.insert(type);
        for (const auto& [name, type] : after.typed.env) rhs.insert(type);
        CHECK(lhs == rhs);
    }
}
