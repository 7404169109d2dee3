#pragma once

#include <set>
#include <string>
#include <utility>

#include <json.hpp>

#include "odsl/doc/document.hpp"

namespace odsl::doc {

enum class ContextScope { Selection, Presentation };

struct ContextOptions {
    // Text content is truncated to this many characters per node.
    std::size_t text_budget = 160;
};

// JSON context tree of the document. Identifier keys (`index`, `name`,
// `shapeType`, `text`, `layout`) mirror the select-statement parameter
// names. A shape carries `text` only when it holds non-empty text, so an
// empty textbox and a filled one project differently.
nlohmann::json extract_context(const PresentationDoc& doc, ContextScope scope,
                               const ContextOptions& options = {});

// The (node path, identifier key) pairs of a context tree, e.g.
// ("slides[0].shapes[1]", "shapeType"). Used for context similarity.
std::set<std::pair<std::string, std::string>> context_identifier_pairs(const nlohmann::json& tree);

// Jaccard similarity of the identifier-pair sets of two context trees.
// Two empty trees are identical (similarity 1).
double context_similarity(const nlohmann::json& a, const nlohmann::json& b);

}  // namespace odsl::doc
