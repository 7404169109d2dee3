#include <doctest.h>

#include "odsl/analysis/checker.hpp"
#include "odsl/doc/engine.hpp"
#include "odsl/lang/parser.hpp"
#include "support/generators.hpp"

using namespace odsl;
using namespace odsl::doc;

namespace {

const Registry& reg() {
    return Registry::builtin();
}

analysis::TypedProgram typed(const std::string& source) {
    auto r = analysis::check(parse(source), reg());
    REQUIRE(r.ok());
    return r.typed;
}

PresentationDoc three_triangles() {
    PresentationDoc doc;
    Slide slide;
    for (int i = 1; i <= 3; ++i) {
        Shape s;
        s.name = "Tri " + std::to_string(i);
        s.shape_type = "Triangle";
        slide.shapes.push_back(s);
    }
    Shape box;
    box.name = "Title";
    box.shape_type = "Textbox";
    box.text_range = TextRange{"Quarterly Review", {}};
    slide.shapes.push_back(box);
    doc.slides.push_back(slide);
    doc.selection = {EntityPath::of_slide(0)};
    return doc;
}

}  // namespace

TEST_CASE("select_shapes with index picks the second triangle in the selection") {
    auto result = execute(typed("shape = select_shapes(shapeType=\"Triangle\", index=1)"),
                          three_triangles());
    REQUIRE(result.env.at("shape").size() == 1);
    CHECK(result.env.at("shape")[0] == EntityPath::of_shape(0, "Tri 2"));
    CHECK(result.log.records.empty());  // selects do not mutate
}

TEST_CASE("runtime misses are silent no-ops that leave the doc bit-identical") {
    PresentationDoc doc = three_triangles();
    auto result = execute(typed("x = select_shapes(name=\"NoSuchShape\")\n"
                                "delete_shapes(shapes=x)\n"),
                          doc);
    CHECK(result.log.records.empty());
    CHECK(result.doc == doc);
    CHECK(result.doc.to_json().dump() == doc.to_json().dump());
}

TEST_CASE("insert_slides on an empty presentation creates slide 0") {
    auto result = execute(typed("insert_slides(layout=\"Title and Content\")"), PresentationDoc{});
    REQUIRE(result.doc.slides.size() == 1);
    CHECK(result.doc.slides[0].layout == "Title and Content");
    REQUIRE(result.log.records.size() == 1);
    CHECK(result.log.records[0].op == "insert_slides");
    CHECK(result.log.records[0].path == EntityPath::of_slide(0));
}

TEST_CASE("insert_slides precededBy inserts one new slide after each anchor") {
    PresentationDoc doc;
    doc.slides.resize(3);
    doc.slides[0].layout = "A";
    doc.slides[1].layout = "B";
    doc.slides[2].layout = "C";
    auto result = execute(typed("anchors = select_slides(scope=\"Presentation\")\n"
                                "fresh = insert_slides(precededBy=anchors, layout=\"New\")\n"),
                          doc);
    REQUIRE(result.doc.slides.size() == 6);
    CHECK(result.doc.slides[0].layout == "A");
    CHECK(result.doc.slides[1].layout == "New");
    CHECK(result.doc.slides[2].layout == "B");
    CHECK(result.doc.slides[3].layout == "New");
    CHECK(result.doc.slides[4].layout == "C");
    CHECK(result.doc.slides[5].layout == "New");
    CHECK(result.env.at("fresh").size() == 3);
}

TEST_CASE("format_text on the selected title emits one record") {
    auto log = transpile(typed("t = select_text(name=\"Title\")\n"
                               "format_text(textRanges=t, bold=true)\n"),
                         three_triangles());
    REQUIRE(log.records.size() == 1);
    CHECK(log.records[0].op == "format_text");
    CHECK(log.records[0].path == EntityPath::of_shape(0, "Title"));
    CHECK(log.records[0].args == nlohmann::json{{"bold", true}});
}

TEST_CASE("empty program transpiles to an empty log") {
    CHECK(transpile(typed(""), three_triangles()).records.empty());
}

TEST_CASE("transpile does not commit mutations") {
    PresentationDoc doc = three_triangles();
    auto log = transpile(typed("x = select_shapes(shapeType=\"Triangle\")\n"
                               "delete_shapes(shapes=x)\n"),
                         doc);
    CHECK(log.records.size() == 3);
    CHECK(doc.slides[0].shapes.size() == 4);  // caller's doc untouched
}

TEST_CASE("insert then insert: parent/child paths are consistent under replay") {
    PresentationDoc doc;
    auto tp = typed(
        "slides = insert_slides(layout=\"Title and Content\")\n"
        "textbox = insert_shapes(shapeType=\"Textbox\", slides=slides)\n");
    auto result = execute(tp, doc);
    REQUIRE(result.log.records.size() == 2);
    CHECK(result.log.records[0].op == "insert_slides");
    CHECK(result.log.records[1].op == "insert_shapes");
    CHECK(result.log.records[1].path.slide == result.log.records[0].path.slide);
    CHECK(replay(result.log, doc) == result.doc);
}

TEST_CASE("insert_text fills a blank textbox, appends a line to a filled one") {
    PresentationDoc doc;
    Slide slide;
    Shape box;
    box.name = "Box";
    box.shape_type = "Textbox";
    box.text_range = TextRange{};
    slide.shapes.push_back(box);
    doc.slides.push_back(slide);
    doc.selection = {EntityPath::of_slide(0)};

    auto r1 = execute(typed("b = select_shapes(shapeType=\"Textbox\")\n"
                            "insert_text(shapes=b, text=\"first\")\n"),
                      doc);
    CHECK(r1.doc.slides[0].shapes[0].text_range->text == "first");

    auto r2 = execute(typed("b = select_shapes(shapeType=\"Textbox\")\n"
                            "insert_text(shapes=b, text=\"second\")\n"),
                      r1.doc);
    CHECK(r2.doc.slides[0].shapes[0].text_range->text == "first\nsecond");
}

TEST_CASE("insert_text without shapes targets the selection's blank textbox, else a new one") {
    PresentationDoc doc;
    Slide slide;
    Shape box;
    box.name = "Empty";
    box.shape_type = "Textbox";
    box.text_range = TextRange{};
    slide.shapes.push_back(box);
    doc.slides.push_back(slide);
    doc.selection = {EntityPath::of_slide(0)};

    auto direct = execute(typed("insert_text(text=\"hi\")"), doc);
    CHECK(direct.doc.slides[0].shapes.size() == 1);
    CHECK(direct.doc.slides[0].shapes[0].text_range->text == "hi");

    auto fresh = execute(typed("insert_text(text=\"again\")"), direct.doc);
    REQUIRE(fresh.doc.slides[0].shapes.size() == 2);
    CHECK(fresh.doc.slides[0].shapes[1].shape_type == "Textbox");
    CHECK(fresh.doc.slides[0].shapes[1].text_range->text == "again");
}

TEST_CASE("insert_images places a placeholder shape carrying the description") {
    PresentationDoc doc;
    doc.slides.resize(1);
    auto result = execute(typed("s = select_slides(scope=\"Presentation\")\n"
                                "imgs = insert_images(slides=s, description=\"A man walking a dog.\")\n"),
                          doc);
    REQUIRE(result.doc.slides[0].shapes.size() == 1);
    const Shape& shape = result.doc.slides[0].shapes[0];
    CHECK(shape.name == "Image 1");
    CHECK(shape.shape_type == "Image");
    CHECK(shape.text_range->text == "A man walking a dog.");
}

TEST_CASE("delete_text clears content but keeps the shape") {
    auto result = execute(typed("t = select_text(name=\"Title\")\ndelete_text(textRanges=t)\n"),
                          three_triangles());
    const Shape* title = result.doc.slides[0].shape("Title");
    REQUIRE(title != nullptr);
    REQUIRE(title->text_range.has_value());
    CHECK(title->text_range->text.empty());
}

TEST_CASE("select text filter: substring vs /regex/") {
    auto sub = execute(typed("t = select_text(text=\"Review\")"), three_triangles());
    CHECK(sub.env.at("t").size() == 1);
    auto rx = execute(typed("t = select_text(text=\"/Q.*Review/\")"), three_triangles());
    CHECK(rx.env.at("t").size() == 1);
    auto miss = execute(typed("t = select_text(text=\"/^Review/\")"), three_triangles());
    CHECK(miss.env.at("t").empty());
    auto cased = execute(typed("t = select_text(text=\"review\")"), three_triangles());
    CHECK(cased.env.at("t").empty());  // substring match is case-sensitive
}

TEST_CASE("select monotonicity: adding a filter never enlarges the result") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        PresentationDoc doc = testutil::random_doc(rng);
        auto broad = execute(typed("x = select_shapes(scope=\"Presentation\")"), doc);
        auto narrow = execute(typed("x = select_shapes(scope=\"Presentation\", shapeType=\"Triangle\")"), doc);
        auto narrower = execute(
            typed("x = select_shapes(scope=\"Presentation\", shapeType=\"Triangle\", index=0)"), doc);
        CHECK(narrow.env.at("x").size() <= broad.env.at("x").size());
        CHECK(narrower.env.at("x").size() <= narrow.env.at("x").size());
    }
}

TEST_CASE("replay determinism and log/state coherence on random docs and programs") {
    std::mt19937_64 rng(7);
    int executed = 0;
    for (int trial = 0; trial < 60; ++trial) {
        PresentationDoc doc = testutil::random_doc(rng);
        Program program = testutil::random_valid_program(rng);
        auto checked = analysis::check(program, reg());
        REQUIRE(checked.ok());

        auto once = execute(checked.typed, doc);
        auto twice = execute(checked.typed, doc);
        CHECK(once.doc == twice.doc);
        CHECK(once.log == twice.log);

        PresentationDoc replayed = replay(once.log, doc);
        CHECK(replayed == once.doc);
        CHECK(replayed.to_json().dump() == once.doc.to_json().dump());
        ++executed;
    }
    CHECK(executed == 60);
}

TEST_CASE("undoability audit") {
    auto result = execute(typed("s = select_slides(scope=\"Presentation\")\n"
                                "delete_slides(slides=s)\n"),
                          three_triangles());
    CHECK(undoability_audit(result.log, reg()).empty());
    CHECK(undoability_audit(ActionLog{}, reg()).empty());

    ActionLog bad;
    bad.records.push_back(ActionRecord{"close_file", EntityPath::presentation(), {}});
    auto violations = undoability_audit(bad, reg());
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].find("close_file") != std::string::npos);
}

TEST_CASE("action log round-trips through JSON") {
    auto result = execute(typed("slides = insert_slides(layout=\"Blank\")\n"
                                "b = insert_shapes(slides=slides, shapeType=\"Ellipse\")\n"
                                "format_shapes(shapes=b, fillColor=\"teal\")\n"),
                          PresentationDoc{});
    ActionLog round = ActionLog::from_json(result.log.to_json());
    CHECK(round == result.log);
}
