#include "repl.hpp"

#include <deque>
#include <iostream>

#include "odsl/analysis/checker.hpp"
#include "odsl/arm/synthesize.hpp"
#include "odsl/doc/context.hpp"
#include "odsl/doc/engine.hpp"
#include "odsl/lang/printer.hpp"
#include "odsl/support/strings.hpp"

namespace odsl::cli {

namespace {

constexpr std::size_t kSnapshotDepth = 20;

void print_help() {
    std::cout << "Type an utterance to synthesize a program, or:\n"
                 "  :context      show the current context tree\n"
                 "  :undo         restore the previous document snapshot\n"
                 "  :save PATH    save the document\n"
                 "  :quit         leave the session\n";
}

bool confirm(const std::string& question) {
    std::cout << question << " [y/N] " << std::flush;
    std::string answer;
    if (!std::getline(std::cin, answer)) return false;
    answer = strings::to_lower(strings::trim(answer));
    return answer == "y" || answer == "yes";
}

}  // namespace

int run_repl(const std::string& doc_path, const std::string& bank_path, const Registry& registry,
             const arm::ArmData& data, const arm::RetrievalConfig& config, arm::LLMClient& client,
             const arm::EmbeddingProvider& embedder) {
    doc::PresentationDoc document = doc::PresentationDoc::load_file(doc_path);
    arm::SampleBank bank = arm::SampleBank::load_file(bank_path, registry, data.normalization);
    bank.ensure_embeddings(embedder);

    std::deque<doc::PresentationDoc> snapshots;
    bool dirty = false;

    std::cout << "Loaded " << doc_path << " (" << document.slides.size() << " slide(s)) and "
              << bank.records().size() << " sample(s). :help for commands.\n";

    std::string line;
    while (true) {
        std::cout << "odsl> " << std::flush;
        if (!std::getline(std::cin, line)) break;
        const std::string input = strings::trim(line);
        if (input.empty()) continue;

        if (input[0] == ':') {
            if (input == ":quit" || input == ":q") {
                if (dirty && confirm("Save changes to " + doc_path + "?")) {
                    document.save_file(doc_path);
                    std::cout << "saved\n";
                }
                break;
            }
            if (input == ":undo") {
                if (snapshots.empty()) {
                    std::cout << "nothing to undo\n";
                } else {
                    document = snapshots.back();
                    snapshots.pop_back();
                    std::cout << "restored previous document state\n";
                }
                continue;
            }
            if (input == ":context") {
                std::cout << doc::extract_context(document, doc::ContextScope::Selection).dump(2)
                          << "\n";
                continue;
            }
            if (input.rfind(":save", 0) == 0) {
                const std::string path = strings::trim(input.substr(5));
                document.save_file(path.empty() ? doc_path : path);
                dirty = false;
                std::cout << "saved\n";
                continue;
            }
            if (input == ":help") {
                print_help();
                continue;
            }
            std::cout << "unknown command '" << input << "'\n";
            print_help();
            continue;
        }

        try {
            const auto context = doc::extract_context(document, doc::ContextScope::Selection);
            auto outcome =
                arm::synthesize(input, &context, bank, config, client, embedder, data, registry,
                                arm::HeuristicTokenEstimator::instance());

            std::cout << pretty_print(outcome.program, registry);
            for (const auto& r : outcome.fix_report.repairs) {
                std::cout << "  [" << autofix::repair_kind_name(r.kind) << "] " << r.after << "\n";
            }
            if (!outcome.fix_report.residual.empty()) {
                for (const auto& d : outcome.fix_report.residual) {
                    std::cout << "  unfixable: " << d.message << "\n";
                }
                continue;
            }

            if (!confirm("Apply?")) continue;

            auto checked = analysis::check(outcome.program, registry);
            if (!checked.ok()) {
                std::cout << "internal: corrected program failed revalidation\n";
                continue;
            }
            snapshots.push_back(document);
            if (snapshots.size() > kSnapshotDepth) snapshots.pop_front();

            auto result = doc::execute(checked.typed, document);
            document = std::move(result.doc);
            dirty = true;
            std::cout << "applied " << result.log.records.size() << " action(s):\n";
            for (const auto& record : result.log.records) {
                std::cout << "  " << record.op << " " << record.path.to_json().dump() << " "
                          << record.args.dump() << "\n";
            }
        } catch (const arm::SynthesisError& e) {
            std::cout << "synthesis failed: " << e.what() << "\n";
        } catch (const arm::EmptyBankAfterFilter& e) {
            std::cout << "synthesis failed: " << e.what() << "\n";
        } catch (const arm::EmptyUtterance&) {
            std::cout << "say something first\n";
        }
    }
    return 0;
}

}  // namespace odsl::cli
