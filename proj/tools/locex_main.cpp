#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "locex/report.hpp"

namespace {

using locex::Json;

void write_output(const Json& doc, const std::string& path) {
    const std::string text = doc.dump(2) + "\n";
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

locex::ObjectiveSpec make_spec(const std::string& objective, double rho,
                               bool rho_set) {
    locex::ObjectiveSpec spec;
    if (objective == "q") {
        spec.kind = locex::ObjectiveKind::Q;
    } else if (objective == "w") {
        spec.kind = locex::ObjectiveKind::W;
    } else if (objective == "wrho") {
        if (!rho_set)
            throw CLI::ValidationError("--rho is required with --objective wrho");
        spec.kind = locex::ObjectiveKind::WRho;
        spec.rho = rho;
    } else {
        throw CLI::ValidationError("unknown objective '" + objective + "'");
    }
    return spec;
}

void collect_warnings(const locex::ExtractionReport& rep,
                      std::vector<std::string>& warnings) {
    if (rep.failed_trials > 0)
        warnings.push_back(std::to_string(rep.failed_trials) + " of " +
                           std::to_string(rep.trials) +
                           " trials ended in the trivial state");
    for (const auto& rec : rep.communities)
        if (!rec.rho_valid)
            warnings.push_back("community of size " +
                               std::to_string(rec.labels.size()) +
                               " violates 2|S|/n < rho");
}

void write_edge_list(const locex::Graph& g, const std::string& path) {
    std::ostringstream out;
    for (const auto& e : g.undirected_edges()) {
        out << g.label(e.u) << '\t' << g.label(e.v);
        if (e.w != 1.0) out << '\t' << e.w;
        out << '\n';
    }
    if (path.empty() || path == "-") {
        std::cout << out.str();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << out.str();
}

int run(int argc, char** argv) {
    CLI::App app{"Local community extraction via discrete Hopfield dynamics"};
    app.require_subcommand(1);

    // shared flags
    std::string input, output;
    std::string objective = "w";
    double rho = 1.0;
    int trials = 500, communities = 1;
    std::uint64_t seed = 0;
    std::string null_model = "none";
    int nulls = 100;

    auto add_extract_flags = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "edge-list file")->required();
        cmd->add_option("--objective", objective, "q|w|wrho");
        cmd->add_option("--rho", rho, "resolution parameter in (0,1]");
        cmd->add_option("--trials", trials, "random restarts per extraction");
        cmd->add_option("--seed", seed, "base RNG seed");
        cmd->add_option("--output", output, "report path (default stdout)");
    };

    auto* cmd_extract = app.add_subcommand("extract", "extract communities");
    add_extract_flags(cmd_extract);
    cmd_extract->add_option("--communities", communities, "how many to extract");
    cmd_extract->add_option("--null", null_model, "none|gnm|rewire");
    cmd_extract->add_option("--nulls", nulls, "null replicates");

    double rho_min = 0.6, rho_max = 1.0;
    int rho_steps = 5;
    std::string tsv_path;
    auto* cmd_sweep = app.add_subcommand("sweep", "multi-resolution rho sweep");
    add_extract_flags(cmd_sweep);
    cmd_sweep->add_option("--communities", communities, "communities per rho");
    cmd_sweep->add_option("--rho-min", rho_min, "grid start");
    cmd_sweep->add_option("--rho-max", rho_max, "grid end");
    cmd_sweep->add_option("--rho-steps", rho_steps, "grid points");
    cmd_sweep->add_option("--tsv", tsv_path, "node x rho membership matrix");

    auto* cmd_oracle = app.add_subcommand("oracle", "exhaustive optimum");
    add_extract_flags(cmd_oracle);

    auto* cmd_generate = app.add_subcommand("generate", "network generators");
    cmd_generate->require_subcommand(1);
    int gen_m = 10, gen_cliques = 100, gen_p = 10, gen_nbg = 1000;
    double gen_bgprob = 0.05;
    int gen_n = 1000, gen_n1 = 100, gen_n2 = 200;
    double gen_pin = 0.3, gen_pout = 0.05;
    std::int64_t gen_edges = 0;
    std::string labels_path;

    auto* gen_ring = cmd_generate->add_subcommand("ring", "ring of cliques");
    gen_ring->add_option("--m", gen_m, "clique size");
    gen_ring->add_option("--cliques", gen_cliques, "number of cliques");
    gen_ring->add_option("--output", output, "edge-list path");

    auto* gen_two = cmd_generate->add_subcommand("two-cliques",
                                                 "two cliques + background");
    gen_two->add_option("--p", gen_p, "clique size");
    gen_two->add_option("--background", gen_nbg, "background nodes");
    gen_two->add_option("--bg-prob", gen_bgprob, "background edge probability");
    gen_two->add_option("--seed", seed, "RNG seed");
    gen_two->add_option("--output", output, "edge-list path");

    auto* gen_planted = cmd_generate->add_subcommand("planted",
                                                     "planted two communities");
    gen_planted->add_option("--n", gen_n, "total nodes");
    gen_planted->add_option("--n1", gen_n1, "community 1 size");
    gen_planted->add_option("--n2", gen_n2, "community 2 size");
    gen_planted->add_option("--pin", gen_pin, "within-community probability");
    gen_planted->add_option("--pout", gen_pout, "background probability");
    gen_planted->add_option("--seed", seed, "RNG seed");
    gen_planted->add_option("--output", output, "edge-list path");
    gen_planted->add_option("--labels", labels_path, "ground-truth label path");

    auto* gen_gnm = cmd_generate->add_subcommand("gnm", "uniform G(n,m)");
    gen_gnm->add_option("--n", gen_n, "nodes");
    gen_gnm->add_option("--m", gen_edges, "edges")->required();
    gen_gnm->add_option("--seed", seed, "RNG seed");
    gen_gnm->add_option("--output", output, "edge-list path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (*cmd_extract) {
            auto spec = make_spec(objective, rho, cmd_extract->count("--rho") > 0);
            auto g = locex::Graph::from_edge_list_file(input);
            locex::ExtractConfig cfg;
            cfg.trials = trials;
            cfg.seed = seed;
            auto reports = locex::extract_sequential(g, spec, communities, cfg);
            std::vector<std::string> warnings;
            Json payload = Json::array();
            for (const auto& rep : reports) {
                Json j = locex::to_json(rep);
                collect_warnings(rep, warnings);
                payload.push_back(std::move(j));
            }
            if (null_model != "none") {
                locex::NullModel model = null_model == "gnm"
                                             ? locex::NullModel::gnm
                                             : locex::NullModel::rewire;
                if (null_model != "gnm" && null_model != "rewire")
                    throw CLI::ValidationError("--null must be none|gnm|rewire");
                for (std::size_t i = 0; i < reports.size(); ++i) {
                    const auto& top = reports[i].communities.front();
                    // significance is judged on the original graph
                    std::vector<int> nodes;
                    for (const auto& label : top.labels)
                        for (int v = 0; v < g.node_count(); ++v)
                            if (g.label(v) == label) nodes.push_back(v);
                    auto sig = locex::significance(g, nodes, spec, nulls, model, cfg);
                    payload[i]["significance"] = locex::to_json(sig);
                }
            }
            Json params{{"input", input},     {"objective", objective},
                        {"rho", rho},         {"trials", trials},
                        {"communities", communities}, {"seed", seed},
                        {"null", null_model}, {"nulls", nulls}};
            write_output(locex::make_document("extract", params, g, payload,
                                              warnings),
                         output);
        } else if (*cmd_sweep) {
            if (objective == "q")
                throw CLI::ValidationError("sweep applies to W-type objectives");
            if (!(rho_min > 0.0 && rho_min <= 1.0 && rho_max > 0.0 &&
                  rho_max <= 1.0 && rho_min <= rho_max) ||
                rho_steps < 1)
                throw CLI::ValidationError("invalid rho grid");
            auto g = locex::Graph::from_edge_list_file(input);
            std::vector<double> grid;
            if (rho_steps == 1) {
                grid.push_back(rho_max);
            } else {
                for (int i = 0; i < rho_steps; ++i)
                    grid.push_back(rho_min + (rho_max - rho_min) * i /
                                                 (rho_steps - 1));
            }
            locex::ExtractConfig cfg;
            cfg.trials = trials;
            cfg.seed = seed;
            auto sweep = locex::rho_sweep(g, grid, communities, cfg);
            std::vector<std::string> warnings;
            for (const auto& reports : sweep.reports)
                for (const auto& rep : reports) collect_warnings(rep, warnings);
            Json params{{"input", input},   {"rho_min", rho_min},
                        {"rho_max", rho_max}, {"rho_steps", rho_steps},
                        {"trials", trials}, {"communities", communities},
                        {"seed", seed}};
            write_output(locex::make_document("sweep", params, g,
                                              locex::to_json(sweep, g),
                                              warnings),
                         output);
            if (!tsv_path.empty()) {
                std::ofstream tsv(tsv_path, std::ios::binary);
                if (!tsv) throw std::runtime_error("cannot write '" + tsv_path + "'");
                tsv << "node";
                for (double r : sweep.rho_grid) tsv << '\t' << r;
                tsv << '\n';
                for (int v = 0; v < g.node_count(); ++v) {
                    tsv << g.label(v);
                    for (std::size_t r = 0; r < sweep.rho_grid.size(); ++r)
                        tsv << '\t' << sweep.membership[r][v];
                    tsv << '\n';
                }
            }
        } else if (*cmd_oracle) {
            auto spec = make_spec(objective, rho, cmd_oracle->count("--rho") > 0);
            auto g = locex::Graph::from_edge_list_file(input);
            auto res = locex::brute_force_best(g, spec);
            Json params{{"input", input}, {"objective", objective}, {"rho", rho}};
            write_output(locex::make_document("oracle", params, g,
                                              locex::to_json(res, g), {}),
                         output);
        } else if (*cmd_generate) {
            if (*gen_ring) {
                write_edge_list(locex::ring_of_cliques(gen_m, gen_cliques),
                                output);
            } else if (*gen_two) {
                write_edge_list(locex::two_cliques_background(
                                    gen_p, gen_nbg, gen_bgprob, seed),
                                output);
            } else if (*gen_planted) {
                auto [g, truth] = locex::planted_two_communities(
                    gen_n, gen_n1, gen_n2, gen_pin, gen_pout, seed);
                write_edge_list(g, output);
                if (!labels_path.empty()) {
                    std::ofstream lf(labels_path, std::ios::binary);
                    if (!lf)
                        throw std::runtime_error("cannot write '" + labels_path + "'");
                    for (int v = 0; v < g.node_count(); ++v) {
                        const int a = truth.assignment[v];
                        lf << g.label(v) << '\t'
                           << (a < 0 ? "background" : "community" + std::to_string(a + 1))
                           << '\n';
                    }
                }
            } else if (*gen_gnm) {
                write_edge_list(locex::gnm_random(gen_n, gen_edges, seed),
                                output);
            }
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
