#include <doctest.h>

#include <random>

#include "odsl/arm/retrieval.hpp"
#include "odsl/doc/context.hpp"
#include "support/retrieval_oracle.hpp"

using namespace odsl::arm;
using nlohmann::json;

namespace {

SampleBank make_bank(const std::vector<std::pair<std::string, EntityTagSet>>& entries) {
    json samples = json::array();
    int n = 0;
    for (const auto& [utterance, tags] : entries) {
        json tag_list = json::array();
        for (auto t : tags) tag_list.push_back(std::string(tag_name(t)));
        samples.push_back(json{{"id", "s" + std::to_string(++n)},
                               {"utterance", utterance},
                               {"entities", tag_list},
                               {"program", "t = select_text()"}});
    }
    SampleBank bank = SampleBank::from_json(json{{"samples", samples}},
                                            odsl::Registry::builtin(),
                                            ArmData::builtin().normalization);
    bank.ensure_embeddings(HashedBowEmbedder{});
    return bank;
}

std::vector<std::string> word_pool() {
    return {"add",   "delete", "format", "title", "text",  "slide", "image",  "picture",
            "shape", "color",  "red",    "blue",  "poem",  "chart", "layout", "bold",
            "font",  "new",    "the",    "a",     "about", "make",  "insert", "resize"};
}

}  // namespace

TEST_CASE("entity filter keeps only records whose tags fit") {
    SampleBank bank = make_bank({
        {"make the title red", {EntityTag::Text}},
        {"insert a picture of a cat", {EntityTag::Image}},
        {"add a rectangle", {EntityTag::Shape}},
        {"add a poem with a picture", {EntityTag::Text, EntityTag::Image}},
    });
    HashedBowEmbedder embedder;
    auto result = select_samples("recolor the title", bank, {EntityTag::Text}, 3, embedder);
    REQUIRE(result.size() == 1);
    CHECK(result[0].record->id == "s1");

    CHECK_THROWS_AS(
        select_samples("anything", bank, {EntityTag::Presentation}, 3, embedder),
        EmptyBankAfterFilter);
}

TEST_CASE("one record per entity when k is small") {
    SampleBank bank = make_bank({
        {"make the title red", {EntityTag::Text}},
        {"recolor the words", {EntityTag::Text}},
        {"insert a picture of a cat", {EntityTag::Image}},
    });
    HashedBowEmbedder embedder;
    auto result = select_samples("add a picture with a caption", bank,
                                 {EntityTag::Text, EntityTag::Image}, 1, embedder);
    // max(k, |E|) = 2, one covering each entity.
    REQUIRE(result.size() == 2);
    EntityTagSet covered;
    for (const auto& s : result) covered.insert(s.record->tags.begin(), s.record->tags.end());
    CHECK(covered.count(EntityTag::Text) == 1);
    CHECK(covered.count(EntityTag::Image) == 1);
}

TEST_CASE("k = 0 with empty entity set yields the greedy cover only") {
    SampleBank bank = make_bank({
        {"make the title red", {EntityTag::Text}},
        {"insert a picture", {EntityTag::Image}},
        {"add a rectangle", {EntityTag::Shape}},
        {"new slide", {EntityTag::Slide}},
        {"rename the deck", {EntityTag::Presentation}},
        {"another text sample", {EntityTag::Text}},
    });
    HashedBowEmbedder embedder;
    auto result = select_samples("do something", bank, {}, 0, embedder);
    auto expected = testutil::oracle_select("do something", bank, {}, 0, embedder);
    REQUIRE(result.size() == expected.size());
    for (std::size_t i = 0; i < result.size(); ++i) CHECK(result[i].bank_index == expected[i]);
    CHECK(result.size() == 5);  // one per coverable entity
}

TEST_CASE("scores are non-increasing and duplicates never appear") {
    SampleBank bank = make_bank({
        {"make the title red", {EntityTag::Text}},
        {"make the title blue", {EntityTag::Text}},
        {"make the title red", {EntityTag::Text}},  // duplicate utterance
        {"insert a picture", {EntityTag::Image}},
    });
    HashedBowEmbedder embedder;
    auto result = select_samples("make the title red", bank,
                                 {EntityTag::Text, EntityTag::Image}, 3, embedder);
    for (std::size_t i = 1; i < result.size(); ++i) {
        CHECK(result[i - 1].score >= result[i].score);
    }
    std::set<std::size_t> seen;
    for (const auto& s : result) CHECK(seen.insert(s.bank_index).second);
}

TEST_CASE("randomized equivalence against the brute-force oracle") {
    std::mt19937_64 rng(20240811);
    HashedBowEmbedder embedder;
    const auto words = word_pool();
    const std::vector<EntityTag> tag_pool{EntityTag::Presentation, EntityTag::Slide,
                                          EntityTag::Text, EntityTag::Image, EntityTag::Shape};

    int checked = 0;
    for (int trial = 0; trial < 80; ++trial) {
        std::vector<std::pair<std::string, EntityTagSet>> entries;
        const std::size_t bank_size = 1 + rng() % 30;
        for (std::size_t i = 0; i < bank_size; ++i) {
            std::string utterance;
            const std::size_t len = 1 + rng() % 6;
            for (std::size_t w = 0; w < len; ++w) {
                if (!utterance.empty()) utterance += ' ';
                utterance += words[rng() % words.size()];
            }
            EntityTagSet tags;
            const std::size_t tag_count = rng() % 4;  // 0..3 tags
            for (std::size_t t = 0; t < tag_count; ++t) tags.insert(tag_pool[rng() % tag_pool.size()]);
            entries.emplace_back(utterance, tags);
        }
        SampleBank bank = make_bank(entries);

        EntityTagSet entities;
        const std::size_t e_count = rng() % 6;  // 0..5
        for (std::size_t t = 0; t < e_count; ++t) entities.insert(tag_pool[rng() % tag_pool.size()]);
        const int k = static_cast<int>(rng() % 10);

        std::string utterance;
        for (std::size_t w = 0; w < 1 + rng() % 5; ++w) {
            if (!utterance.empty()) utterance += ' ';
            utterance += words[rng() % words.size()];
        }

        std::vector<std::size_t> expected;
        bool oracle_empty = false;
        expected = testutil::oracle_select(utterance, bank, entities, k, embedder);
        if (expected.empty()) oracle_empty = true;

        if (oracle_empty) {
            // The filter removed everything; the implementation must refuse.
            bool empty_filter = true;
            const EntityTagSet universe = entities.empty() ? all_tags() : entities;
            for (const auto& rec : bank.records()) {
                bool inside = true;
                for (auto tag : rec.tags)
                    if (universe.count(tag) == 0) inside = false;
                if (inside) empty_filter = false;
            }
            if (empty_filter) {
                CHECK_THROWS_AS(select_samples(utterance, bank, entities, k, embedder),
                                EmptyBankAfterFilter);
                continue;
            }
        }

        auto actual = select_samples(utterance, bank, entities, k, embedder);
        REQUIRE(actual.size() == expected.size());
        for (std::size_t i = 0; i < actual.size(); ++i) {
            CHECK(actual[i].bank_index == expected[i]);
        }
        ++checked;
    }
    CHECK(checked > 40);
}

TEST_CASE("sub-sample selection picks the most similar context") {
    json blank_textbox = {{"slides", json::array({{{"index", 0},
                                                   {"shapes", json::array({{{"index", 0},
                                                                            {"name", "Body"},
                                                                            {"shapeType", "Textbox"}}})}}})}};
    json filled_textbox = {{"slides", json::array({{{"index", 0},
                                                    {"shapes", json::array({{{"index", 0},
                                                                             {"name", "Body"},
                                                                             {"shapeType", "Textbox"},
                                                                             {"text", "Hello"}}})}}})}};
    json no_textbox = {{"slides", json::array({{{"index", 0}, {"shapes", json::array()}}})}};

    json record{{"id", "s1"},
                {"utterance", "Add text to slide"},
                {"entities", json::array({"text"})},
                {"program", "t = select_text()"},
                {"subSamples",
                 json::array({json{{"context", blank_textbox},
                                   {"program", "box = select_shapes(shapeType=\"Textbox\")\n"
                                               "insert_text(shapes=box, text=\"Hello\")"}},
                              json{{"context", filled_textbox},
                                   {"program", "box = select_shapes(shapeType=\"Textbox\")\n"
                                               "insert_text(shapes=box, text=\"Hello\")"}},
                              json{{"context", no_textbox},
                                   {"program", "s = select_slides()\n"
                                               "box = insert_shapes(slides=s, shapeType=\"Textbox\")\n"
                                               "insert_text(shapes=box, text=\"Hello\")"}}})}};

    SampleBank bank = SampleBank::from_json(json{{"samples", json::array({record})}},
                                            odsl::Registry::builtin(),
                                            ArmData::builtin().normalization);
    const SampleRecord& rec = bank.records()[0];

    // Current context with one empty textbox: the direct-insert variant.
    auto pick = pick_subsample(rec, blank_textbox);
    CHECK(pick.context == &rec.sub_samples[0].context);

    // Identical context to a sub-sample: that sub-sample, similarity 1.
    auto exact = pick_subsample(rec, no_textbox);
    CHECK(exact.context == &rec.sub_samples[2].context);

    // All-distinct scores: argmax verified by exhaustive scoring.
    auto best = pick_subsample(rec, filled_textbox);
    double best_score = -1.0;
    const nlohmann::json* best_ctx = nullptr;
    for (const auto& sub : rec.sub_samples) {
        const double s = odsl::doc::context_similarity(sub.context, filled_textbox);
        if (s > best_score) {
            best_score = s;
            best_ctx = &sub.context;
        }
    }
    CHECK(best.context == best_ctx);
}

TEST_CASE("records without sub-samples return their single program") {
    SampleBank bank = make_bank({{"make the title red", {EntityTag::Text}}});
    auto pick = pick_subsample(bank.records()[0], json::object());
    CHECK(pick.context == nullptr);
    CHECK(pick.program == &bank.records()[0].program);
}

TEST_CASE("sub-samples with duplicate contexts are rejected at load") {
    json ctx = {{"slides", json::array()}};
    json record{{"id", "dup"},
                {"utterance", "x"},
                {"entities", json::array({"text"})},
                {"program", "t = select_text()"},
                {"subSamples", json::array({json{{"context", ctx}, {"program", "t = select_text()"}},
                                            json{{"context", ctx}, {"program", "t = select_text()"}}})}};
    CHECK_THROWS(SampleBank::from_json(json{{"samples", json::array({record})}},
                                       odsl::Registry::builtin(),
                                       ArmData::builtin().normalization));
}
