// odsl — command-line front end for the ODSL toolchain: parse, check,
// auto-correct, execute and transpile programs, extract document context,
// index sample banks, synthesize programs from utterances and run the
// evaluation harness.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "odsl/analysis/checker.hpp"
#include "odsl/arm/synthesize.hpp"
#include "odsl/doc/context.hpp"
#include "odsl/doc/engine.hpp"
#include "odsl/eval/runner.hpp"
#include "odsl/fix/fixer.hpp"
#include "odsl/lang/json_io.hpp"
#include "odsl/lang/parser.hpp"
#include "odsl/lang/printer.hpp"

#include "repl.hpp"

namespace {

using namespace odsl;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitDiagnostics = 2;
constexpr int kExitProvider = 3;
constexpr int kExitUsage = 64;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return v != nullptr ? std::string(v) : fallback;
}

struct CommonOptions {
    std::string registry_path;
    std::string arm_data_path;

    const Registry& registry() const {
        if (registry_path.empty()) return Registry::builtin();
        if (!loaded_registry) loaded_registry = std::make_shared<Registry>(Registry::load_file(registry_path));
        return *loaded_registry;
    }
    const arm::ArmData& arm_data() const {
        if (arm_data_path.empty()) return arm::ArmData::builtin();
        if (!loaded_arm) loaded_arm = std::make_shared<arm::ArmData>(arm::ArmData::load_file(arm_data_path));
        return *loaded_arm;
    }

    mutable std::shared_ptr<Registry> loaded_registry;
    mutable std::shared_ptr<arm::ArmData> loaded_arm;
};

struct ProviderOptions {
    std::string provider = "mock";  // mock | http
    std::string mock_file;
    std::string classifier = "llm";
    int k = 5;
    int token_budget = 4097;
    int completion_allowance = 512;
    double temperature = 0.0;
    double top_p = 1.0;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--provider", provider, "LLM provider: mock or http")
            ->check(CLI::IsMember({"mock", "http"}));
        cmd->add_option("--mock-file", mock_file,
                        "canned responses for the mock provider (or $ODSL_MOCK_FILE)");
        cmd->add_option("--classifier", classifier, "classifier backend: llm or rules")
            ->check(CLI::IsMember({"llm", "rules"}));
        cmd->add_option("--k", k, "minimum number of retrieved samples");
        cmd->add_option("--token-budget", token_budget, "prompt + completion token limit");
        cmd->add_option("--completion-allowance", completion_allowance,
                        "tokens reserved for the model output");
        cmd->add_option("--temperature", temperature, "sampling temperature");
        cmd->add_option("--top-p", top_p, "nucleus sampling cutoff");
    }

    arm::RetrievalConfig config() const {
        arm::RetrievalConfig cfg;
        cfg.k = k;
        cfg.token_budget = token_budget;
        cfg.completion_allowance = completion_allowance;
        cfg.llm_provider = provider;
        cfg.classifier = classifier;
        cfg.temperature = temperature;
        cfg.top_p = top_p;
        return cfg;
    }

    std::unique_ptr<arm::LLMClient> make_client() const {
        if (provider == "mock") {
            const std::string path = !mock_file.empty() ? mock_file : env_or("ODSL_MOCK_FILE", "");
            if (path.empty())
                throw std::runtime_error("mock provider needs --mock-file or $ODSL_MOCK_FILE");
            return std::make_unique<arm::MockLLMClient>(arm::MockLLMClient::load_file(path));
        }
        arm::HttpOptions options;
        options.endpoint = env_or("ODSL_ENDPOINT", "");
        options.api_key = env_or("ODSL_API_KEY", "");
        options.model = env_or("ODSL_MODEL", "gpt-3.5-turbo");
        if (options.endpoint.empty())
            throw arm::ProviderError("http provider needs $ODSL_ENDPOINT", false);
        const std::string cache_dir = env_or("ODSL_CACHE_DIR", "");
        if (!cache_dir.empty()) options.cache = std::make_shared<arm::ResponseCache>(cache_dir);
        return std::make_unique<arm::HttpLLMClient>(options);
    }

    std::unique_ptr<arm::EmbeddingProvider> make_embedder() const {
        if (provider == "http" && !env_or("ODSL_ENDPOINT", "").empty()) {
            arm::HttpOptions options;
            options.endpoint = env_or("ODSL_ENDPOINT", "");
            options.api_key = env_or("ODSL_API_KEY", "");
            options.model = env_or("ODSL_EMBED_MODEL", "text-embedding-3-small");
            const std::string cache_dir = env_or("ODSL_CACHE_DIR", "");
            if (!cache_dir.empty()) options.cache = std::make_shared<arm::ResponseCache>(cache_dir);
            return std::make_unique<arm::HttpEmbeddingProvider>(options, 1536);
        }
        return std::make_unique<arm::HashedBowEmbedder>();
    }
};

int cmd_parse(const std::string& file, const std::string& format, const CommonOptions& common) {
    Program program = parse(read_file(file));
    if (format == "json") {
        std::cout << program_to_json(program).dump(2) << "\n";
    } else {
        std::cout << pretty_print(program, common.registry());
    }
    return kExitOk;
}

int cmd_check(const std::string& file, const std::string& format, const CommonOptions& common) {
    Program program = parse(read_file(file));
    auto result = analysis::check(program, common.registry());
    if (format == "json") {
        std::cout << json{{"ok", result.ok()},
                          {"diagnostics", analysis::diagnostics_to_json(result.diagnostics)}}
                         .dump(2)
                  << "\n";
    } else if (result.ok()) {
        std::cout << "ok\n";
    } else {
        for (const auto& d : result.diagnostics) {
            std::cout << file << ":" << d.span.line << ":" << d.span.col << ": "
                      << analysis::diag_code_name(d.code) << ": " << d.message << "\n";
        }
    }
    return result.ok() ? kExitOk : kExitDiagnostics;
}

int cmd_fix(const std::string& file, const std::string& out, const std::string& report_format,
            const CommonOptions& common) {
    Program program = parse(read_file(file));
    const Registry& registry = common.registry();
    auto checked = analysis::check(program, registry);
    auto report = autofix::fix(program, checked.diagnostics, registry);

    const std::string corrected = pretty_print(report.program, registry);
    if (!out.empty()) write_file(out, corrected);

    if (report_format == "json") {
        std::cout << report.to_json(registry).dump(2) << "\n";
    } else {
        std::cout << corrected;
        for (const auto& r : report.repairs) {
            std::cerr << "fixed (" << autofix::repair_kind_name(r.kind) << ") " << r.before
                      << "  ->  " << r.after << "\n";
        }
        for (const auto& d : report.residual) {
            std::cerr << file << ":" << d.span.line << ":" << d.span.col << ": unfixable: "
                      << d.message << "\n";
        }
    }
    return report.residual.empty() ? kExitOk : kExitDiagnostics;
}

// Shared front half of run/transpile: parse, check, auto-correct.
std::optional<analysis::TypedProgram> load_program_for_execution(const std::string& file,
                                                                 const Registry& registry) {
    Program program = parse(read_file(file));
    auto checked = analysis::check(program, registry);
    if (!checked.ok()) {
        auto fixed = autofix::fix(program, checked.diagnostics, registry);
        if (!fixed.residual.empty()) {
            for (const auto& d : fixed.residual) {
                std::cerr << file << ":" << d.span.line << ":" << d.span.col << ": "
                          << analysis::diag_code_name(d.code) << ": " << d.message << "\n";
            }
            return std::nullopt;
        }
        for (const auto& r : fixed.repairs) {
            std::cerr << "auto-corrected: " << r.before << "  ->  " << r.after << "\n";
        }
        checked = analysis::check(fixed.program, registry);
        if (!checked.ok()) return std::nullopt;
    }
    return checked.typed;
}

int cmd_run(const std::string& file, const std::string& doc_path, const std::string& out_doc,
            const std::string& actions_path, bool emit_actions, const CommonOptions& common) {
    const Registry& registry = common.registry();
    auto tp = load_program_for_execution(file, registry);
    if (!tp) return kExitDiagnostics;

    doc::PresentationDoc document = doc::PresentationDoc::load_file(doc_path);
    auto result = doc::execute(*tp, document);

    auto violations = doc::undoability_audit(result.log, registry);
    for (const auto& v : violations) std::cerr << "audit: " << v << "\n";
    if (!violations.empty()) return kExitDiagnostics;

    if (!out_doc.empty()) result.doc.save_file(out_doc);
    if (!actions_path.empty()) result.log.save_file(actions_path);
    if (emit_actions) std::cout << result.log.to_json().dump(2) << "\n";
    if (!emit_actions) {
        std::cerr << result.log.records.size() << " action(s), " << result.doc.slides.size()
                  << " slide(s)\n";
    }
    return kExitOk;
}

int cmd_transpile(const std::string& file, const std::string& doc_path,
                  const std::string& actions_path, const CommonOptions& common) {
    const Registry& registry = common.registry();
    auto tp = load_program_for_execution(file, registry);
    if (!tp) return kExitDiagnostics;

    doc::PresentationDoc document = doc::PresentationDoc::load_file(doc_path);
    doc::ActionLog log = doc::transpile(*tp, document);

    auto violations = doc::undoability_audit(log, registry);
    for (const auto& v : violations) std::cerr << "audit: " << v << "\n";
    if (!violations.empty()) return kExitDiagnostics;

    if (!actions_path.empty()) {
        log.save_file(actions_path);
    } else {
        std::cout << log.to_json().dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_context(const std::string& doc_path, const std::string& scope, std::size_t text_budget) {
    doc::PresentationDoc document = doc::PresentationDoc::load_file(doc_path);
    doc::ContextOptions options;
    options.text_budget = text_budget;
    const auto tree = doc::extract_context(document,
                                           scope == "presentation"
                                               ? doc::ContextScope::Presentation
                                               : doc::ContextScope::Selection,
                                           options);
    std::cout << tree.dump(2) << "\n";
    return kExitOk;
}

int cmd_bank_index(const std::string& bank_path, const std::string& out,
                   const CommonOptions& common, const ProviderOptions& providers) {
    arm::SampleBank bank =
        arm::SampleBank::load_file(bank_path, common.registry(), common.arm_data().normalization);
    auto embedder = providers.make_embedder();
    bank.ensure_embeddings(*embedder);
    bank.save_file(out.empty() ? bank_path : out);
    std::cerr << "indexed " << bank.records().size() << " sample(s) with embedder '"
              << embedder->id() << "'\n";
    return kExitOk;
}

int cmd_synthesize(const std::string& utterance, const std::string& bank_path,
                   const std::string& doc_path, bool dump_prompt, const std::string& format,
                   const CommonOptions& common, const ProviderOptions& providers) {
    const Registry& registry = common.registry();
    const arm::ArmData& data = common.arm_data();
    arm::SampleBank bank = arm::SampleBank::load_file(bank_path, registry, data.normalization);
    auto embedder = providers.make_embedder();
    bank.ensure_embeddings(*embedder);
    auto client = providers.make_client();
    arm::RetrievalConfig cfg = providers.config();

    std::optional<json> context;
    if (!doc_path.empty()) {
        context = doc::extract_context(doc::PresentationDoc::load_file(doc_path),
                                       doc::ContextScope::Selection);
    }

    if (dump_prompt) {
        auto analysis_result = cfg.classifier == "rules"
                                   ? arm::classify_with_rules(utterance, data)
                                   : arm::classify_with_llm(utterance, *client, data);
        auto samples = arm::select_samples(utterance, bank, analysis_result.entities, cfg.k, *embedder);
        auto bundle = arm::build_prompt(utterance, context ? &*context : nullptr, analysis_result,
                                        samples, cfg, data, arm::HeuristicTokenEstimator::instance());
        std::cout << bundle.render() << "\n";
        return kExitOk;
    }

    auto outcome = arm::synthesize(utterance, context ? &*context : nullptr, bank, cfg, *client,
                                   *embedder, data, registry,
                                   arm::HeuristicTokenEstimator::instance());
    const bool clean = outcome.fix_report.residual.empty();
    if (format == "json") {
        std::cout << json{{"program", pretty_print(outcome.program, registry)},
                          {"entities", arm::tag_set_to_string(outcome.analysis.entities)},
                          {"requiresContext", outcome.analysis.requires_context},
                          {"promptTokens", outcome.prompt.estimated_tokens},
                          {"repairs", outcome.fix_report.to_json(registry).at("repairs")},
                          {"residualDiagnostics",
                           analysis::diagnostics_to_json(outcome.fix_report.residual)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << pretty_print(outcome.program, registry);
        for (const auto& r : outcome.fix_report.repairs) {
            std::cerr << "fixed (" << autofix::repair_kind_name(r.kind) << "): " << r.after << "\n";
        }
        for (const auto& d : outcome.fix_report.residual) {
            std::cerr << "unfixable: " << d.message << "\n";
        }
    }
    return clean ? kExitOk : kExitDiagnostics;
}

int cmd_eval_run(const std::string& suite_path, const std::string& mode,
                 const std::string& report_path, bool strict, int jobs,
                 const std::string& bank_path, const CommonOptions& common,
                 const ProviderOptions& providers) {
    const Registry& registry = common.registry();
    eval::EvalSuite suite = eval::EvalSuite::load_file(suite_path, registry);

    eval::EvalReport report;
    if (mode == "offline") {
        report = eval::run_suite(
            suite, [&](const eval::EvalCase& c) { return eval::offline_generate(c, registry); },
            registry, strict, jobs);
    } else {
        const arm::ArmData& data = common.arm_data();
        if (bank_path.empty()) throw std::runtime_error("synthesize mode needs --bank");
        arm::SampleBank bank = arm::SampleBank::load_file(bank_path, registry, data.normalization);
        auto embedder = providers.make_embedder();
        bank.ensure_embeddings(*embedder);
        auto client = providers.make_client();
        arm::RetrievalConfig cfg = providers.config();

        report = eval::run_suite(
            suite,
            [&](const eval::EvalCase& c) -> eval::GradeInput {
                std::optional<json> context = c.context;
                auto outcome = arm::synthesize(c.utterance, context ? &*context : nullptr, bank,
                                               cfg, *client, *embedder, data, registry,
                                               arm::HeuristicTokenEstimator::instance());
                if (!outcome.fix_report.residual.empty()) return eval::GradeInput{{}, true};
                return eval::GradeInput{outcome.program, false};
            },
            registry, strict, jobs);
    }

    std::cout << report.render_table();
    if (!report_path.empty()) write_file(report_path, report.to_json().dump(2) + "\n");

    const long failures =
        report.level_counts[static_cast<int>(eval::MatchLevel::None)] +
        report.level_counts[static_cast<int>(eval::MatchLevel::Error)];
    return failures == 0 ? kExitOk : kExitDiagnostics;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ODSL toolchain: parse, validate, auto-correct, execute and synthesize "
                 "presentation-editing programs"};
    app.require_subcommand(1);

    CommonOptions common;
    app.add_option("--registry", common.registry_path, "statement schema registry JSON")
        ->envname("ODSL_REGISTRY");
    app.add_option("--arm-data", common.arm_data_path,
                   "normalization/classifier/prompt data JSON")
        ->envname("ODSL_ARM_DATA");

    std::string file, doc_path, out, format = "text", scope = "selection";
    std::string actions_path, report_path, suite_path, mode = "offline", bank_path, utterance;
    bool emit_actions = false, dump_prompt = false, strict = false;
    std::size_t text_budget = 160;
    int jobs = 1;
    ProviderOptions providers;

    auto* parse_cmd = app.add_subcommand("parse", "parse a program and print its canonical form");
    parse_cmd->add_option("file", file)->required();
    parse_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* check_cmd = app.add_subcommand("check", "validate a program");
    check_cmd->add_option("file", file)->required();
    check_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* fix_cmd = app.add_subcommand("fix", "auto-correct a program");
    fix_cmd->add_option("file", file)->required();
    fix_cmd->add_option("-o,--out", out, "write the corrected program here");
    fix_cmd->add_option("--report", format)->check(CLI::IsMember({"text", "json"}))
        ->description("report format (text prints the program, json the full fix report)");

    auto* run_cmd = app.add_subcommand("run", "execute a program against a document");
    run_cmd->add_option("file", file)->required();
    run_cmd->add_option("--doc", doc_path)->required();
    run_cmd->add_option("--out-doc", out, "write the post-state document here");
    run_cmd->add_option("--actions", actions_path, "write the action log here");
    run_cmd->add_flag("--emit-actions", emit_actions, "print the action log to stdout");

    auto* transpile_cmd = app.add_subcommand("transpile", "emit the action log without mutating");
    transpile_cmd->add_option("file", file)->required();
    transpile_cmd->add_option("--doc", doc_path)->required();
    transpile_cmd->add_option("--actions", actions_path, "write the action log here");

    auto* context_cmd = app.add_subcommand("context", "print a document's context tree");
    context_cmd->add_option("--doc", doc_path)->required();
    context_cmd->add_option("--scope", scope)->check(CLI::IsMember({"selection", "presentation"}));
    context_cmd->add_option("--text-budget", text_budget, "max characters of text per node");

    auto* bank_cmd = app.add_subcommand("bank", "sample bank utilities");
    auto* bank_index = bank_cmd->add_subcommand("index", "compute and persist embeddings");
    bank_index->add_option("--bank", bank_path)->required();
    bank_index->add_option("-o,--out", out, "write the indexed bank here (default: in place)");
    providers.add_flags(bank_index);

    auto* synth_cmd = app.add_subcommand("synthesize", "utterance -> checked ODSL program");
    synth_cmd->add_option("--utterance", utterance)->required();
    synth_cmd->add_option("--bank", bank_path)->required();
    synth_cmd->add_option("--doc", doc_path, "document whose context accompanies the utterance");
    synth_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    synth_cmd->add_flag("--dump-prompt", dump_prompt, "print the exact rendered prompt and stop");
    providers.add_flags(synth_cmd);

    auto* eval_cmd = app.add_subcommand("eval", "evaluation harness");
    auto* eval_run = eval_cmd->add_subcommand("run", "grade a suite of cases");
    eval_run->add_option("--suite", suite_path)->required();
    eval_run->add_option("--mode", mode)->check(CLI::IsMember({"offline", "synthesize"}));
    eval_run->add_option("--report", report_path, "write the JSON report here");
    eval_run->add_flag("--strict", strict, "subprogram matches do not count as passes");
    eval_run->add_option("--jobs", jobs, "grade cases across this many workers");
    eval_run->add_option("--bank", bank_path, "sample bank (synthesize mode)");
    providers.add_flags(eval_run);

    auto* repl_cmd = app.add_subcommand("repl", "interactive utterance loop against a document");
    repl_cmd->add_option("--doc", doc_path)->required();
    repl_cmd->add_option("--bank", bank_path)->required();
    providers.add_flags(repl_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (parse_cmd->parsed()) return cmd_parse(file, format, common);
        if (check_cmd->parsed()) return cmd_check(file, format, common);
        if (fix_cmd->parsed()) return cmd_fix(file, out, format, common);
        if (run_cmd->parsed())
            return cmd_run(file, doc_path, out, actions_path, emit_actions, common);
        if (transpile_cmd->parsed()) return cmd_transpile(file, doc_path, actions_path, common);
        if (context_cmd->parsed()) return cmd_context(doc_path, scope, text_budget);
        if (bank_index->parsed()) return cmd_bank_index(bank_path, out, common, providers);
        if (synth_cmd->parsed())
            return cmd_synthesize(utterance, bank_path, doc_path, dump_prompt, format, common,
                                  providers);
        if (eval_run->parsed())
            return cmd_eval_run(suite_path, mode, report_path, strict, jobs, bank_path, common,
                                providers);
        if (repl_cmd->parsed())
            return odsl::cli::run_repl(doc_path, bank_path, common.registry(), common.arm_data(),
                                       providers.config(), *providers.make_client(),
                                       *providers.make_embedder());
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitDiagnostics;
    } catch (const arm::ProviderError& e) {
        std::cerr << "provider error: " << e.what() << "\n";
        return kExitProvider;
    } catch (const arm::SynthesisError& e) {
        std::cerr << "synthesis error: " << e.what() << "\n";
        return e.provider_failure() ? kExitProvider : kExitDiagnostics;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}
