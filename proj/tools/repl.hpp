#pragma once

#include <string>

#include "odsl/arm/prompt.hpp"
#include "odsl/arm/providers.hpp"
#include "odsl/lang/registry.hpp"

namespace odsl::cli {

// Interactive loop: read an utterance, synthesize a program, show it (plus
// any repairs) and execute on confirmation. `:undo` restores the previous
// document snapshot, `:quit` leaves (offering to save changes).
int run_repl(const std::string& doc_path, const std::string& bank_path, const Registry& registry,
             const arm::ArmData& data, const arm::RetrievalConfig& config, arm::LLMClient& client,
             const arm::EmbeddingProvider& embedder);

}  // namespace odsl::cli
