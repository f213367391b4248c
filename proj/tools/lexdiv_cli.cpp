// lexdiv command-line front end.

#include "lexdiv/analytics.hpp"
#include "lexdiv/export.hpp"
#include "lexdiv/fixtures.hpp"
#include "lexdiv/ingest.hpp"
#include "lexdiv/json.hpp"
#include "lexdiv/layout.hpp"
#include "lexdiv/service.hpp"

#include <CLI11.hpp>

#include <csignal>
#include <fstream>
#include <iostream>

namespace {

using namespace lexdiv;

lexdiv::service::Server* g_server = nullptr;

void on_signal(int) {
    if (g_server) g_server->stop();
}

ingest::LoadResult load_or_report(const std::string& dir, bool use_cache) {
    auto result = ingest::load_data_dir(dir, use_cache);
    if (!result.report.rejected.empty())
        std::cerr << "warning: " << result.report.rejected.size() << " rejected line(s)\n";
    if (!result.violations.empty())
        std::cerr << "warning: " << result.violations.size() << " invariant violation(s)\n";
    return result;
}

// Runs `write` against --output (or stdout).
template <typename F>
void with_sink(const std::string& output, F&& write) {
    if (output.empty() || output == "-") {
        write(std::cout);
        return;
    }
    std::ofstream out(output, std::ios::trunc);
    if (!out) throw Error(errc::io, "cannot open " + output);
    write(out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lexdiv: multilingual lexical diversity database"};
    app.require_subcommand(1);

    std::string data_dir;
    std::size_t min_overlap = analytics::kDefaultMinOverlap;
    std::uint64_t seed = 42;
    bool use_cache = false;

    // ingest
    auto* ingest_cmd = app.add_subcommand("ingest", "Ingest a data directory and print the ingest report");
    ingest_cmd->add_option("data-dir,--data-dir", data_dir, "Directory of TSV files")->required();
    ingest_cmd->add_flag("--cache", use_cache, "Write a binary snapshot next to the data");

    // validate
    auto* validate_cmd = app.add_subcommand("validate", "Check every store invariant");
    validate_cmd->add_option("data-dir,--data-dir", data_dir, "Directory of TSV files")->required();

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "Diversity analytics");
    std::string analysis;
    std::string concept_id;
    analyze_cmd->add_option("analysis", analysis, "similarity | clusters | diversity")
        ->required()
        ->check(CLI::IsMember({"similarity", "clusters", "diversity"}));
    analyze_cmd->add_option("--data-dir", data_dir)->required();
    analyze_cmd->add_option("--min-overlap", min_overlap, "Minimum shared concepts per language pair");
    analyze_cmd->add_option("--concept", concept_id, "Restrict clusters/diversity to one concept");

    // layout
    auto* layout_cmd = app.add_subcommand("layout", "Force-directed layout of the similarity graph");
    double threshold = 0.0;
    std::size_t iterations = 500;
    double eps = 1e-4;
    layout::LayoutParams params;
    layout_cmd->add_option("--data-dir", data_dir)->required();
    layout_cmd->add_option("--min-overlap", min_overlap);
    layout_cmd->add_option("--seed", seed);
    layout_cmd->add_option("--threshold", threshold, "Minimum similarity for an edge")->check(CLI::Range(0.0, 1.0));
    layout_cmd->add_option("--iterations", iterations)->check(CLI::PositiveNumber);
    layout_cmd->add_option("--eps", eps, "Stop when the largest displacement falls below this");
    layout_cmd->add_option("--repulsion", params.k_r);
    layout_cmd->add_option("--gravity", params.k_g);
    layout_cmd->add_option("--speed", params.speed);
    layout_cmd->add_flag("--adaptive", params.adaptive, "Swinging/traction speed control");

    // export
    auto* export_cmd = app.add_subcommand("export", "Catalogue exports");
    export_cmd->require_subcommand(1);
    export_cmd->fallthrough();
    std::string output;
    export_cmd->add_option("--data-dir", data_dir)->required();
    export_cmd->add_option("-o,--output", output, "Output file (default stdout)");
    export_cmd->add_option("--min-overlap", min_overlap);
    std::string raw_kind;
    auto* raw_cmd = export_cmd->add_subcommand("raw", "Raw dataset");
    raw_cmd->add_option("kind", raw_kind, "gaps | cognates | similarity | clusters")
        ->required()
        ->check(CLI::IsMember({"gaps", "cognates", "similarity", "clusters"}));
    std::string language;
    std::string format = "lmf";
    auto* lexicon_cmd = export_cmd->add_subcommand("lexicon", "Single lexicon");
    lexicon_cmd->add_option("language", language)->required();
    lexicon_cmd->add_option("--format", format)->check(CLI::IsMember({"lmf", "tsv"}));
    std::vector<std::string> languages;
    auto* set_cmd = export_cmd->add_subcommand("lexicon-set", "Concept-aligned lexicon set");
    set_cmd->add_option("languages", languages)->required()->expected(2, -1);

    // serve
    auto* serve_cmd = app.add_subcommand("serve", "Serve the JSON API");
    service::ServiceConfig config;
    serve_cmd->add_option("--data-dir", data_dir)->required();
    serve_cmd->add_option("--port", config.port);
    serve_cmd->add_option("--host", config.host);
    serve_cmd->add_option("--min-overlap", min_overlap);
    serve_cmd->add_option("--seed", seed);
    serve_cmd->add_option("--iterations", config.layout_iterations);
    serve_cmd->add_flag("--cache", use_cache);

    // fixtures
    auto* fixtures_cmd = app.add_subcommand("fixtures", "Write the built-in fixture data sets");
    std::string fixture_set = "all";
    std::string fixture_dir;
    fixtures_cmd->add_option("dir", fixture_dir)->required();
    fixtures_cmd->add_option("--set", fixture_set)->check(CLI::IsMember({"f1", "f2", "all"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ingest_cmd) {
            auto result = load_or_report(data_dir, use_cache);
            std::cout << json::encode(result.report).dump(2) << "\n";
            return result.clean() ? 0 : 1;
        }

        if (*validate_cmd) {
            auto result = load_or_report(data_dir, false);
            auto out = nlohmann::json::array();
            for (const auto& v : result.violations) out.push_back(json::encode(v));
            std::cout << out.dump(2) << "\n";
            return result.violations.empty() ? 0 : 1;
        }

        if (*analyze_cmd) {
            auto store = load_or_report(data_dir, false).store;
            std::vector<std::string> concepts;
            if (!concept_id.empty()) concepts.push_back(concept_id);
            else
                for (const auto& [id, c] : store.concepts()) concepts.push_back(id);

            if (analysis == "similarity") {
                exports::export_raw(store, exports::RawKind::similarity, std::cout, min_overlap);
            } else if (analysis == "clusters") {
                for (const auto& id : concepts)
                    std::cout << json::encode(analytics::cognate_clusters(store, id), store).dump() << "\n";
            } else {
                std::cout << "# concept\tindex\tlanguages\tclusters\n";
                for (const auto& id : concepts) {
                    if (store.senses_of_concept(id).empty()) continue;
                    auto d = analytics::diversity_index(store, id);
                    std::cout << id << '\t' << d.index << '\t' << d.languages << '\t' << d.clusters << '\n';
                }
            }
            return 0;
        }

        if (*layout_cmd) {
            auto store = load_or_report(data_dir, false).store;
            params.seed = seed;
            std::vector<std::string> codes;
            for (const auto& [code, l] : store.languages()) codes.push_back(code);
            auto graph = layout::build_graph(analytics::similarity_matrix(store, min_overlap), threshold, codes);
            auto result = layout::run(graph, params, iterations, eps);
            std::cerr << "iterations: " << result.iterations << (result.converged ? " (converged)" : "") << "\n";
            std::cout << layout::positions_tsv(graph, result.positions);
            return 0;
        }

        if (*export_cmd) {
            auto store = load_or_report(data_dir, false).store;
            with_sink(output, [&](std::ostream& out) {
                if (*raw_cmd) {
                    exports::export_raw(store, *exports::parse_raw_kind(raw_kind), out, min_overlap);
                } else if (*lexicon_cmd) {
                    exports::export_lexicon(store, language, *exports::parse_lexicon_format(format), out);
                } else {
                    exports::export_lexicon_set(store, languages, out);
                }
            });
            return 0;
        }

        if (*serve_cmd) {
            config.data_dir = data_dir;
            config.min_overlap = min_overlap;
            config.layout.seed = seed;
            config.use_cache = use_cache;
            std::shared_ptr<const Store> store;
            try {
                store = service::load_store(config);
            } catch (const service::StartupError& e) {
                std::cerr << e.what() << "\n";
                auto out = nlohmann::json::object();
                out["report"] = json::encode(e.result().report);
                out["violations"] = nlohmann::json::array();
                for (const auto& v : e.result().violations) out["violations"].push_back(json::encode(v));
                std::cerr << out.dump(2) << "\n";
                return 2;
            }
            auto api = std::make_shared<service::Api>(store, config);
            service::Server server(api);
            int port = server.bind(config.host, config.port);
            if (port < 0) {
                std::cerr << "cannot bind " << config.host << ":" << config.port << "\n";
                return 3;
            }
            g_server = &server;
            std::signal(SIGINT, on_signal);
            std::signal(SIGTERM, on_signal);
            std::cerr << "listening on http://" << config.host << ":" << port << "\n";
            server.listen();
            g_server = nullptr;
            return 0;
        }

        if (*fixtures_cmd) {
            fixtures::Files files = fixture_set == "f1"   ? fixtures::f1()
                                    : fixture_set == "f2" ? fixtures::f2()
                                                          : fixtures::combine(fixtures::f1(), fixtures::f2());
            fixtures::write_dir(files, fixture_dir);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
