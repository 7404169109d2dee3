#include <doctest.h>

#include "odsl/lang/registry.hpp"

using namespace odsl;

TEST_CASE("registry lookup resolves bundled statements") {
    const Registry& reg = Registry::builtin();
    CHECK(reg.schema_version() == 1);

    const StatementSchema* select_text = reg.lookup("select_text");
    REQUIRE(select_text != nullptr);
    CHECK(select_text->family == StatementFamily::Select);
    CHECK(select_text->target == EntityType::TextRanges);
    CHECK(select_text->returns == EntityType::TextRanges);
    REQUIRE(select_text->param("scope") != nullptr);
    CHECK(select_text->param("scope")->kind == ParamKind::ScopeRef);
    CHECK(select_text->param("scope")->default_str == "Selection");

    CHECK(reg.lookup("insert_picture") == nullptr);
    CHECK(reg.lookup("") == nullptr);
}

TEST_CASE("every select schema has a scope defaulting to Selection") {
    for (const auto& schema : Registry::builtin().statements()) {
        if (schema.family != StatementFamily::Select) continue;
        const ParamSpec* scope = schema.param("scope");
        REQUIRE(scope != nullptr);
        CHECK(scope->kind == ParamKind::ScopeRef);
        CHECK(scope->default_str == "Selection");
        REQUIRE(schema.returns.has_value());
    }
}

TEST_CASE("family return conventions") {
    for (const auto& schema : Registry::builtin().statements()) {
        switch (schema.family) {
            case StatementFamily::Select:
            case StatementFamily::Insert:
            case StatementFamily::Delegation:
                CHECK(schema.returns.has_value());
                break;
            case StatementFamily::Format:
            case StatementFamily::Delete:
                CHECK_FALSE(schema.returns.has_value());
                break;
        }
    }
}

TEST_CASE("entity hierarchy is a total order") {
    CHECK(strictly_above(EntityType::Presentation, EntityType::Slides));
    CHECK(strictly_above(EntityType::Slides, EntityType::Shapes));
    CHECK(strictly_above(EntityType::Shapes, EntityType::TextRanges));
    CHECK(strictly_above(EntityType::Slides, EntityType::TextRanges));
    CHECK_FALSE(strictly_above(EntityType::TextRanges, EntityType::Slides));
    CHECK_FALSE(strictly_above(EntityType::Shapes, EntityType::Shapes));
}

TEST_CASE("aliases and injections load from the registry file") {
    const Registry& reg = Registry::builtin();
    CHECK(reg.aliases().at("insert_picture") == "insert_images");
    const InjectionRule* circle = reg.injection_for("insert_shapes", "shapeType", "Circle");
    REQUIRE(circle != nullptr);
    CHECK(circle->replace_with == "Ellipse");
    REQUIRE(circle->append.size() == 1);
    CHECK(circle->append[0].name == "format_shapes");
    CHECK(reg.injection_for("insert_shapes", "shapeType", "Hexagon") == nullptr);
}

TEST_CASE("ranged parameters carry finite bounds") {
    const StatementSchema* fs = Registry::builtin().lookup("format_shapes");
    REQUIRE(fs != nullptr);
    const ParamSpec* p = fs->param("fillTransparency");
    REQUIRE(p != nullptr);
    CHECK(p->kind == ParamKind::RangedNumber);
    CHECK(p->lo == 0.0);
    CHECK(p->hi == 1.0);
}
