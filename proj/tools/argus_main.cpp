#include "argus/aql/query.hpp"
#include "argus/evidence/evidence.hpp"
#include "argus/gsn/case.hpp"
#include "argus/guardsim/guardsim.hpp"
#include "argus/store/turtle.hpp"
#include "argus/verdict/verdict.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace argus;

enum Exit : int { kOk = 0, kFailure = 1, kDefeated = 2, kInconclusive = 3, kInvalid = 4 };

std::string namespace_iri() {
    const char* env = std::getenv("ARGUS_PREFIX");
    return env != nullptr && *env != '\0' ? std::string(env) : std::string("urn:argus:");
}

gsn::AssuranceCase load_case(const std::string& path) {
    try {
        return gsn::parse_case(read_file(path), aql::default_prefixes(namespace_iri()));
    } catch (const ParseError& e) {
        throw Error(path + ":" + e.what());
    }
}

store::Graph load_store(const std::string& path) {
    try {
        return store::parse_turtle(read_file(path));
    } catch (const ParseError& e) {
        throw Error(path + ":" + e.what());
    }
}

nlohmann::json load_json(const std::string& path) {
    try {
        return nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw Error(path + ": malformed JSON: " + e.what());
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_file(out_path, text);
    }
}

int exit_for(verdict::ClaimStatus root) {
    switch (root) {
        case verdict::ClaimStatus::Supported: return kOk;
        case verdict::ClaimStatus::Defeated: return kDefeated;
        default: return kInconclusive;
    }
}

int cmd_validate(const std::string& case_path) {
    auto diagnostics = gsn::validate_case(load_case(case_path));
    std::cerr << format_diagnostics(diagnostics);
    return diagnostics.empty() ? kOk : kInvalid;
}

int cmd_evaluate(const std::string& case_path, const std::string& store_path, const std::string& at,
                 const std::string& json_out) {
    auto gsn_case = load_case(case_path);
    auto graph = load_store(store_path);
    std::string evaluated_at = at.empty() ? evidence::Timestamp::now().to_string() : at;
    evidence::Timestamp::parse(evaluated_at);
    verdict::StatusReport report;
    try {
        report = verdict::evaluate_case(gsn_case, graph, evaluated_at);
    } catch (const verdict::InvalidCaseError& e) {
        std::cerr << format_diagnostics(e.diagnostics());
        return kInvalid;
    }
    emit(verdict::dump_report(report), json_out);
    for (const auto& [id, status] : verdict::status_map(report)) {
        std::cerr << id << '\t' << status << '\n';
    }
    std::cerr << "root: " << verdict::to_string(report.root) << '\n';
    return exit_for(report.root);
}

int cmd_ingest(const std::string& records_path, const std::string& store_path, const std::string& out_path,
               std::string journal_path) {
    auto graph = load_store(store_path);
    auto parsed = evidence::parse_records(read_file(records_path));
    if (!parsed.diagnostics.empty()) {
        std::cerr << records_path << ":\n" << format_diagnostics(parsed.diagnostics);
        return kFailure;
    }
    if (journal_path.empty()) {
        journal_path = out_path + ".journal.jsonl";
    }
    std::string ns = namespace_iri();
    if (graph.prefixes().count("") == 0) {
        graph.set_prefix("", ns);
    }

    // Stage the store first so a failed store write leaves the journal alone;
    // the rename happens only after the journal append succeeded.
    evidence::MemoryJournal staged;
    auto result = evidence::ingest(graph, parsed.records, staged, ns);
    std::string temp = out_path + ".tmp";
    write_file(temp, store::serialize_turtle(result.graph));
    try {
        evidence::FileJournal(journal_path).append(staged.lines());
    } catch (...) {
        std::filesystem::remove(temp);
        throw;
    }
    std::filesystem::rename(temp, out_path);

    std::size_t applied = 0;
    for (bool a : result.applied) {
        applied += a ? 1 : 0;
    }
    std::cerr << "ingested " << parsed.records.size() << " record(s), " << applied << " applied\n";
    return kOk;
}

std::string cell_text(const store::Graph& graph, const std::optional<store::Term>& cell) {
    if (!cell) {
        return "";
    }
    if (const auto* lit = std::get_if<store::Literal>(&*cell)) {
        return lit->lexical();
    }
    return store::compact_iri(graph.prefixes(), std::get<store::Iri>(*cell));
}

int cmd_query(const std::string& store_path, const std::string& query_text) {
    auto graph = load_store(store_path);
    aql::Query query;
    try {
        query = aql::parse_query(query_text, aql::default_prefixes(namespace_iri()));
    } catch (const ParseError& e) {
        throw Error("query:" + std::string(e.what()));
    }
    auto table = aql::evaluate_query(graph, query);
    std::string out;
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i != 0) {
                out += '\t';
            }
            out += cell_text(graph, row[i]);
        }
        out += '\n';
    }
    std::cout << out;
    return kOk;
}

int cmd_render(const std::string& case_path, const std::string& status_from) {
    auto gsn_case = load_case(case_path);
    std::optional<gsn::StatusMap> statuses;
    if (!status_from.empty()) {
        statuses = verdict::status_map(verdict::report_from_json(load_json(status_from)));
    }
    std::cout << gsn::render_dot(gsn_case, statuses);
    return kOk;
}

int cmd_simulate(const std::string& corpus_path, const std::string& config_path, const std::string& train_path,
                 const std::string& emit_path, const std::string& at) {
    auto config = guardsim::load_config(config_path);
    if (!train_path.empty()) {
        config.perplexity.training_corpus = train_path;
    }
    auto corpus = guardsim::parse_corpus(read_file(corpus_path));
    guardsim::NgramModel model(config.perplexity.n);
    if (config.perplexity.enabled) {
        if (config.perplexity.training_corpus.empty()) {
            throw Error("perplexity filter is enabled but no training corpus is configured (use --train)");
        }
        model = guardsim::train_ngram(read_file(config.perplexity.training_corpus), config.perplexity.n);
    }
    std::string observed_at = at.empty() ? evidence::Timestamp::now().to_string() : at;
    evidence::Timestamp::parse(observed_at);

    guardsim::OutputFilter filter(config.output_rules);
    std::vector<guardsim::PipelineOutcome> outcomes;
    for (const auto& record : corpus) {
        outcomes.push_back(guardsim::run_pipeline(record, config, model, filter));
        const auto& o = outcomes.back();
        std::cerr << o.record_id << '\t'
                  << (o.input_blocked_by ? "blocked:" + std::string(guardsim::stage_name(*o.input_blocked_by))
                                         : std::string(o.delivered ? "delivered" : "withheld"))
                  << '\t' << (o.attack_succeeded ? "succeeded" : "-") << '\n';
        for (const auto& w : o.warnings) {
            std::cerr << "  warning: " << w << '\n';
        }
    }
    std::string out;
    for (const auto& r : guardsim::summarize(corpus, outcomes, observed_at)) {
        out += evidence::record_to_json(r).dump();
        out += '\n';
    }
    emit(out, emit_path);
    return kOk;
}

int cmd_diff(const std::string& a, const std::string& b) {
    auto old_report = verdict::report_from_json(load_json(a));
    auto new_report = verdict::report_from_json(load_json(b));
    std::cout << verdict::changes_to_json(verdict::diff_reports(old_report, new_report)).dump(2) << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Assurance cases over an attack/defense knowledge graph"};
    app.require_subcommand(1);

    std::string case_path, store_path, at, json_out, records_path, out_path, journal_path, query_text;
    std::string status_from, corpus_path, config_path, train_path, emit_path, report_a, report_b;

    auto* validate = app.add_subcommand("validate", "Check a case for well-formedness");
    validate->add_option("case", case_path, "Case file")->required();

    auto* evaluate = app.add_subcommand("evaluate", "Evaluate a case against a store");
    evaluate->add_option("case", case_path, "Case file")->required();
    evaluate->add_option("store", store_path, "Turtle store")->required();
    evaluate->add_option("--at", at, "Report timestamp");
    evaluate->add_option("--json", json_out, "Write the report here instead of stdout");

    auto* ingest = app.add_subcommand("ingest", "Ingest evidence records into a store");
    ingest->add_option("records", records_path, "Evidence JSON-lines")->required();
    ingest->add_option("store", store_path, "Turtle store")->required();
    ingest->add_option("--out", out_path, "Updated store")->required();
    ingest->add_option("--journal", journal_path, "Journal file (default <out>.journal.jsonl)");

    auto* query = app.add_subcommand("query", "Run an AQL query; rows as TSV");
    query->add_option("store", store_path, "Turtle store")->required();
    query->add_option("query", query_text, "Query text")->required();

    auto* render = app.add_subcommand("render", "Render a case as Graphviz DOT");
    render->add_option("case", case_path, "Case file")->required();
    render->add_option("--status-from", status_from, "Status report to color nodes by");

    auto* simulate = app.add_subcommand("simulate", "Run a corpus through the guardrail simulator");
    simulate->add_option("--corpus", corpus_path, "Corpus JSON-lines")->required();
    simulate->add_option("--config", config_path, "Filter configuration")->required();
    simulate->add_option("--train", train_path, "Perplexity training text (overrides the config)");
    simulate->add_option("--emit", emit_path, "Write evidence records here instead of stdout");
    simulate->add_option("--at", at, "observed_at of emitted records");

    auto* diff = app.add_subcommand("diff", "Status changes between two reports");
    diff->add_option("old", report_a, "Earlier report")->required();
    diff->add_option("new", report_b, "Later report")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kFailure;
    }

    try {
        if (*validate) {
            return cmd_validate(case_path);
        }
        if (*evaluate) {
            return cmd_evaluate(case_path, store_path, at, json_out);
        }
        if (*ingest) {
            return cmd_ingest(records_path, store_path, out_path, journal_path);
        }
        if (*query) {
            return cmd_query(store_path, query_text);
        }
        if (*render) {
            return cmd_render(case_path, status_from);
        }
        if (*simulate) {
            return cmd_simulate(corpus_path, config_path, train_path, emit_path, at);
        }
        if (*diff) {
            return cmd_diff(report_a, report_b);
        }
    } catch (const std::exception& e) {
        std::cerr << "argus: " << e.what() << '\n';
        return kFailure;
    }
    return kFailure;
}
