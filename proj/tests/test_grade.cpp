#include <doctest.h>

#include <random>

#include "odsl/eval/grade.hpp"
#include "odsl/eval/normalize.hpp"
#include "odsl/eval/subprogram.hpp"
#include "odsl/lang/parser.hpp"
#include "odsl/lang/printer.hpp"
#include "support/generators.hpp"

using namespace odsl;
using namespace odsl::eval;

namespace {

const Registry& reg() {
    return Registry::builtin();
}

EvalCase make_case(std::vector<std::string> acceptable) {
    EvalCase c;
    c.id = "t";
    c.utterance = "test";
    for (auto& text : acceptable) {
        c.acceptable.push_back(parse(text));
        c.acceptable_texts.push_back(std::move(text));
    }
    return c;
}

GradeInput input_of(const std::string& text) {
    GradeInput in;
    in.program = parse(text);
    return in;
}

}  // namespace

TEST_CASE("byte-for-byte equality grades Exact") {
    auto c = make_case({"t = select_text()\nformat_text(textRanges=t, bold=true)\n"});
    CHECK(grade(c, input_of("t = select_text()\nformat_text(textRanges=t, bold=true)\n"), reg()) ==
          MatchLevel::Exact);
}

TEST_CASE("renamed variables grade Normalized, not Exact") {
    auto c = make_case({"t = select_text()\nformat_text(textRanges=t, bold=true)\n"});
    CHECK(grade(c, input_of("x = select_text()\nformat_text(textRanges=x, bold=true)\n"), reg()) ==
          MatchLevel::Normalized);
}

TEST_CASE("reordered arguments grade Normalized, not Exact") {
    auto c = make_case({"t = select_text()\nformat_text(textRanges=t, bold=true, size=20)\n"});
    CHECK(grade(c, input_of("t = select_text()\nformat_text(size=20, bold=true, textRanges=t)\n"),
                reg()) == MatchLevel::Normalized);
}

TEST_CASE("extra statements grade SubprogramExact") {
    auto c = make_case({"text = select_text(name=\"Body\")\n"
                        "format_text(textRanges=text, fontName=\"Segoe Script\")\n"});
    CHECK(grade(c,
                input_of("text = select_text(name=\"Body\")\n"
                         "format_text(textRanges=text, fontName=\"Segoe Script\", bold=true)\n"),
                reg()) == MatchLevel::SubprogramExact);
}

TEST_CASE("renamed-and-extended output grades SubprogramNormalized") {
    auto c = make_case({"s = select_slides()\ni = insert_images(slides=s, description=\"A dog\")\n"});
    // Different description (desensitized), different names, extra statement.
    CHECK(grade(c,
                input_of("x = select_slides()\n"
                         "y = insert_images(slides=x, description=\"A golden retriever\")\n"
                         "format_shapes(shapes=y, top=10)\n"),
                reg()) == MatchLevel::SubprogramNormalized);
}

TEST_CASE("generation failure grades Error") {
    auto c = make_case({"t = select_text()\n"});
    CHECK(grade(c, GradeInput{{}, true}, reg()) == MatchLevel::Error);
    CHECK(grade(c, GradeInput{}, reg()) == MatchLevel::Error);
}

TEST_CASE("recorded manual verdicts grade ManualCheckValid") {
    auto c = make_case({"t = select_text()\nformat_text(textRanges=t, bold=true)\n"});
    const std::string creative = "s = select_slides()\nformat_slides(slides=s, layout=\"Blank\")\n";
    c.manual_valid.push_back(
        pretty_print(normalize_program(parse(creative), reg(), true), reg()));
    CHECK(grade(c, input_of(creative), reg()) == MatchLevel::ManualCheckValid);
    CHECK(grade(c, input_of("x = select_shapes()\ndelete_shapes(shapes=x)\n"), reg()) ==
          MatchLevel::None);
}

TEST_CASE("unrelated output grades None") {
    auto c = make_case({"t = select_text()\nformat_text(textRanges=t, bold=true)\n"});
    CHECK(grade(c, input_of("s = select_shapes()\ndelete_shapes(shapes=s)\n"), reg()) ==
          MatchLevel::None);
}

TEST_CASE("any acceptable program can produce the match") {
    auto c = make_case({"t = select_text()\nformat_text(textRanges=t, bold=true)\n",
                        "t = select_text()\nformat_text(textRanges=t, italic=true)\n"});
    CHECK(grade(c, input_of("t = select_text()\nformat_text(textRanges=t, italic=true)\n"), reg()) ==
          MatchLevel::Exact);
}

TEST_CASE("ladder consistency: an Exact match also satisfies every weaker check") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 25; ++trial) {
        Program p = testutil::random_valid_program(rng);
        EvalCase c;
        c.id = "prop";
        c.utterance = "prop";
        c.acceptable.push_back(p);
        GradeInput in;
        in.program = p;
        REQUIRE(grade(c, in, reg()) == MatchLevel::Exact);

        const Program np = normalize_program(p, reg(), true);
        CHECK(normalize_program(p, reg(), true).strict_equal(np));
        CHECK(is_subprogram(p, p));
        CHECK(is_subprogram(np, np));
    }
}
