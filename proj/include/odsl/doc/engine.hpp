#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "odsl/analysis/checker.hpp"
#include "odsl/doc/document.hpp"
#include "odsl/lang/registry.hpp"

namespace odsl::doc {

// One replayable document mutation. Select statements produce no records;
// runtime misses produce none either, so an empty program section leaves the
// log untouched.
struct ActionRecord {
    std::string op;
    EntityPath path;
    nlohmann::json args;

    bool operator==(const ActionRecord&) const = default;
    nlohmann::json to_json() const;
    static ActionRecord from_json(const nlohmann::json& j);
};

struct ActionLog {
    std::vector<ActionRecord> records;

    bool operator==(const ActionLog&) const = default;
    nlohmann::json to_json() const;
    static ActionLog from_json(const nlohmann::json& j);
    static ActionLog load_file(const std::string& path);
    void save_file(const std::string& path) const;
};

// Delegation hook behind insert_images. The default implementation stores
// the description as a placeholder shape instead of calling a real
// image-generation service.
class ImageProvider {
public:
    virtual ~ImageProvider() = default;
    virtual Shape make_image_shape(const std::string& description) const;

    static const ImageProvider& placeholder();
};

struct ExecOptions {
    const ImageProvider* image_provider = nullptr;  // null -> placeholder
};

struct ExecResult {
    PresentationDoc doc;
    ActionLog log;
    // Final runtime environment: variable -> selected entity paths.
    std::map<std::string, std::vector<EntityPath>> env;
};

// Executes a checked program. Runtime misses (selecting entities that do not
// exist, formatting an empty list) are silent no-ops.
ExecResult execute(const analysis::TypedProgram& tp, const PresentationDoc& doc,
                   const ExecOptions& options = {});

// Same action log as execute, with no mutation visible to the caller.
ActionLog transpile(const analysis::TypedProgram& tp, const PresentationDoc& doc,
                    const ExecOptions& options = {});

// Applies a recorded log to a copy of the pre-state. Replaying the log
// produced by execute reproduces execute's post-state exactly.
PresentationDoc replay(const ActionLog& log, const PresentationDoc& pre,
                       const ExecOptions& options = {});

// Every op must be a registered (hence undo-safe) statement. Returns the
// violations; empty means the log is clean.
std::vector<std::string> undoability_audit(const ActionLog& log, const Registry& registry);

}  // namespace odsl::doc
