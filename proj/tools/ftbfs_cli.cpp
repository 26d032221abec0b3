// Command line front end. Six subcommands: gen, build, verify, analyze,
// spanner, scale. Exactly one JSON document on stdout; diagnostics on
// stderr. Exit 0 on success, 1 when a verification or analysis run found
// violations (the report is still emitted), 2 on usage or input errors.
// Output files are staged in memory and written only after the computation
// finished, so a failing run never leaves partial files.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <ftbfs/analysis.hpp>
#include <ftbfs/builder.hpp>
#include <ftbfs/graph.hpp>
#include <ftbfs/report_json.hpp>
#include <ftbfs/scale.hpp>
#include <ftbfs/spanner.hpp>
#include <ftbfs/verifier.hpp>

namespace {

using ftbfs::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct PendingWrites {
    std::vector<std::pair<std::string, std::string>> files;

    void add(std::string path, std::string content) {
        files.emplace_back(std::move(path), std::move(content));
    }

    void flush() const {
        for (const auto& [path, content] : files) {
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (!out) throw std::runtime_error("cannot write " + path);
            out << content;
            if (!out) throw std::runtime_error("write failed: " + path);
        }
    }
};

ftbfs::Graph load_graph(const std::string& path) { return ftbfs::parse_graph(read_file(path)); }

long parse_long(const std::string& s, const char* what) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (...) {
        throw std::invalid_argument(std::string(what) + ": bad number '" + s + "'");
    }
    if (used != s.size())
        throw std::invalid_argument(std::string(what) + ": bad number '" + s + "'");
    return v;
}

std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(static_cast<int>(parse_long(tok, what)));
    if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
    return out;
}

struct Sampling {
    bool exhaustive = true;
    long pairs = 0;
    std::uint64_t seed = 0;
};

// "exhaustive" or "sample:<pairs>[:seed=<seed>]".
Sampling parse_sampling(const std::string& s) {
    Sampling out;
    if (s == "exhaustive") return out;
    const std::string prefix = "sample:";
    if (s.rfind(prefix, 0) != 0)
        throw std::invalid_argument(
            "sampling: expected 'exhaustive' or 'sample:<pairs>[:seed=<seed>]'");
    std::string rest = s.substr(prefix.size());
    const auto colon = rest.find(':');
    if (colon != std::string::npos) {
        const std::string seed_part = rest.substr(colon + 1);
        if (seed_part.rfind("seed=", 0) != 0)
            throw std::invalid_argument("sampling: expected ':seed=<seed>' after the count");
        out.seed = static_cast<std::uint64_t>(parse_long(seed_part.substr(5), "sampling seed"));
        rest = rest.substr(0, colon);
    }
    out.pairs = parse_long(rest, "sampling count");
    if (out.pairs < 0) throw std::invalid_argument("sampling: count must be nonnegative");
    out.exhaustive = false;
    return out;
}

ftbfs::FailureMode parse_mode(const std::string& s) {
    if (s == "edge") return ftbfs::FailureMode::edge;
    if (s == "vertex") return ftbfs::FailureMode::vertex;
    throw std::invalid_argument("mode: expected 'edge' or 'vertex'");
}

std::vector<ftbfs::Vertex> parse_sources(const std::string& s) {
    return parse_int_list(s, "sources");
}

ftbfs::FailureEnumeration make_enumeration(const ftbfs::Graph& g, ftbfs::FailureMode mode, int k,
                                           const Sampling& sampling,
                                           const std::vector<ftbfs::Vertex>& excluded) {
    if (sampling.exhaustive) return ftbfs::enumerate_failure_sets(g, mode, k, excluded);
    return ftbfs::sample_failure_sets(g, mode, sampling.pairs, sampling.seed, k, excluded);
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sparse fault tolerant BFS structures"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate a graph file");
    std::string gen_model = "gnp";
    int gen_n = 0;
    double gen_p = 0.0;
    std::uint64_t gen_seed = 0;
    bool gen_directed = false;
    std::string gen_output;
    gen->add_option("--model", gen_model, "gnp|path|cycle|complete (default gnp)");
    gen->add_option("--n", gen_n, "vertex count")->required();
    auto* gen_p_opt = gen->add_option("--p", gen_p, "gnp edge probability (default 3 ln n / n)");
    gen->add_option("--seed", gen_seed, "generator seed (default 0)");
    gen->add_flag("--directed", gen_directed, "generate a directed graph");
    gen->add_option("--output", gen_output, "graph file to write")->required();

    auto* build = app.add_subcommand("build", "build a fault tolerant subgraph");
    std::string b_input, b_sources = "0", b_mode = "edge", b_output;
    int b_k = 2, b_threads = 1;
    build->add_option("--input", b_input, "graph file")->required();
    build->add_option("--sources", b_sources, "comma separated source vertices (default 0)");
    build->add_option("--k", b_k, "failures tolerated, 0..2 (default 2)");
    build->add_option("--mode", b_mode, "edge|vertex (default edge)");
    build->add_option("--threads", b_threads, "worker threads (default 1)");
    build->add_option("--output", b_output,
                      "subgraph file to write; a .assignments.json sidecar goes next to it");

    auto* verify = app.add_subcommand("verify", "compare subgraph distances against the graph");
    std::string v_input, v_subgraph, v_sources = "0", v_mode = "edge";
    std::string v_sampling = "exhaustive", v_output;
    int v_k = 2, v_threads = 1;
    verify->add_option("--input", v_input, "graph file")->required();
    verify->add_option("--subgraph", v_subgraph, "subgraph file")->required();
    verify->add_option("--sources", v_sources, "comma separated source vertices (default 0)");
    verify->add_option("--k", v_k, "failures tolerated, 0..2 (default 2)");
    verify->add_option("--mode", v_mode, "edge|vertex (default edge)");
    verify->add_option("--sampling", v_sampling,
                       "exhaustive | sample:<pairs>[:seed=<seed>] (default exhaustive)");
    verify->add_option("--threads", v_threads, "worker threads (default 1)");
    verify->add_option("--output", v_output, "also write the report to this file");

    auto* analyze = app.add_subcommand("analyze", "build and check structural properties");
    std::string a_input, a_sources = "0", a_mode = "edge", a_output;
    int a_k = 2, a_threads = 1;
    analyze->add_option("--input", a_input, "graph file")->required();
    analyze->add_option("--sources", a_sources, "comma separated source vertices (default 0)");
    analyze->add_option("--k", a_k, "failures tolerated, 0..2 (default 2)");
    analyze->add_option("--mode", a_mode, "edge|vertex (default edge)");
    analyze->add_option("--threads", a_threads, "worker threads (default 1)");
    analyze->add_option("--output", a_output, "also write the report to this file");

    auto* spanner = app.add_subcommand("spanner", "build and check a +2 additive spanner");
    std::string s_input, s_sigma = "auto", s_sampling = "exhaustive", s_output;
    std::uint64_t s_seed = 0;
    int s_threads = 1;
    spanner->add_option("--input", s_input, "graph file")->required();
    spanner->add_option("--sigma", s_sigma, "source budget, integer or 'auto' (= ceil(n^(1/4)))");
    spanner->add_option("--seed", s_seed, "source sampling seed (default 0)");
    spanner->add_option("--sampling", s_sampling,
                        "stretch check: exhaustive | sample:<pairs>[:seed=<seed>]");
    spanner->add_option("--threads", s_threads, "worker threads (default 1)");
    spanner->add_option("--output", s_output, "spanner subgraph file to write");

    auto* scale = app.add_subcommand("scale", "size scaling sweep over generated graphs");
    std::string c_sizes, c_model = "gnp", c_mode = "edge", c_output;
    int c_trials = 3, c_sigma = 1, c_k = 2, c_threads = 1;
    double c_p = 0.0;
    std::uint64_t c_seed = 0;
    scale->add_option("--sizes", c_sizes, "comma separated vertex counts")->required();
    scale->add_option("--trials", c_trials, "trials per size (default 3)");
    scale->add_option("--seed", c_seed, "base seed (default 0)");
    scale->add_option("--model", c_model, "gnp|path|cycle|complete (default gnp)");
    auto* c_p_opt = scale->add_option("--p", c_p, "gnp edge probability (default 3 ln n / n)");
    scale->add_option("--sigma", c_sigma, "number of sources, 0..sigma-1 (default 1)");
    scale->add_option("--k", c_k, "failures tolerated, 0..2 (default 2)");
    scale->add_option("--mode", c_mode, "edge|vertex (default edge)");
    scale->add_option("--threads", c_threads, "worker threads (default 1)");
    scale->add_option("--output", c_output, "also write the rows as CSV to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        PendingWrites out;
        json doc;
        int rc = 0;

        if (gen->parsed()) {
            const auto model = ftbfs::graph_model_from_name(gen_model);
            if (!model) throw std::invalid_argument("model: unknown '" + gen_model + "'");
            std::optional<double> p;
            if (*model == ftbfs::GraphModel::gnp) {
                p = gen_p_opt->count() ? gen_p : ftbfs::scale_default_p(gen_n);
                if (*p < 0.0 || *p > 1.0)
                    throw std::invalid_argument("p: must lie in [0,1]");
            }
            const ftbfs::Graph g = ftbfs::gen_graph(*model, gen_n, p, gen_seed, gen_directed);
            doc = {{"model", gen_model},
                   {"n", g.vertex_count()},
                   {"seed", gen_seed},
                   {"directed", g.directed()},
                   {"edges", g.edge_count()}};
            if (p) doc["p"] = *p;
            out.add(gen_output, ftbfs::serialize_graph(g) + "\n");
        } else if (build->parsed()) {
            const ftbfs::Graph g = load_graph(b_input);
            const auto st = ftbfs::build_ft_mbfs(g, parse_sources(b_sources), b_k,
                                                 parse_mode(b_mode), b_threads);
            doc = ftbfs::json_build_summary(g, st);
            if (!b_output.empty()) {
                out.add(b_output, ftbfs::serialize_graph(ftbfs::structure_graph(st)) + "\n");
                out.add(b_output + ".assignments.json",
                        ftbfs::json_assignments(st).dump(2) + "\n");
            }
        } else if (verify->parsed()) {
            const ftbfs::Graph g = load_graph(v_input);
            const ftbfs::Graph h = load_graph(v_subgraph);
            const auto sources = parse_sources(v_sources);
            const auto mode = parse_mode(v_mode);
            const auto fe =
                make_enumeration(g, mode, v_k, parse_sampling(v_sampling), sources);
            const auto report = ftbfs::verify_structure(g, h, sources, v_k, fe, v_threads);
            doc = ftbfs::json_verification(report);
            if (!v_output.empty()) out.add(v_output, doc.dump(2) + "\n");
            rc = report.pass ? 0 : 1;
        } else if (analyze->parsed()) {
            const ftbfs::Graph g = load_graph(a_input);
            const auto st = ftbfs::build_ft_mbfs(g, parse_sources(a_sources), a_k,
                                                 parse_mode(a_mode), a_threads);
            const auto report = ftbfs::analyze_structure(g, st);
            doc = {{"build", ftbfs::json_build_summary(g, st)},
                   {"analysis", ftbfs::json_analysis(report)}};
            if (!a_output.empty()) out.add(a_output, doc.dump(2) + "\n");
            rc = report.all_ok ? 0 : 1;
        } else if (spanner->parsed()) {
            const ftbfs::Graph g = load_graph(s_input);
            int sigma = 0;
            if (s_sigma != "auto") {
                sigma = static_cast<int>(parse_long(s_sigma, "sigma"));
                if (sigma < 1) throw std::invalid_argument("sigma: must be positive or 'auto'");
            }
            const auto result = ftbfs::build_additive_spanner(g, sigma, s_seed, s_threads);
            const ftbfs::Graph h = ftbfs::spanner_graph(g, result);
            const auto fe = make_enumeration(g, ftbfs::FailureMode::edge, 2,
                                             parse_sampling(s_sampling), {});
            const auto stretch = ftbfs::verify_spanner_stretch(g, h, fe, s_threads);
            doc = {{"spanner", ftbfs::json_spanner(result)},
                   {"stretch", ftbfs::json_stretch(stretch)}};
            if (!s_output.empty()) out.add(s_output, ftbfs::serialize_graph(h) + "\n");
            rc = stretch.pass ? 0 : 1;
        } else if (scale->parsed()) {
            ftbfs::ScaleConfig cfg;
            cfg.sizes = parse_int_list(c_sizes, "sizes");
            cfg.trials = c_trials;
            cfg.base_seed = c_seed;
            const auto model = ftbfs::graph_model_from_name(c_model);
            if (!model) throw std::invalid_argument("model: unknown '" + c_model + "'");
            cfg.model = *model;
            if (c_p_opt->count()) {
                if (c_p < 0.0 || c_p > 1.0) throw std::invalid_argument("p: must lie in [0,1]");
                cfg.p = c_p;
            }
            cfg.sigma = c_sigma;
            cfg.k = c_k;
            cfg.mode = parse_mode(c_mode);
            cfg.threads = c_threads;
            const auto report = ftbfs::run_scale(cfg);
            doc = ftbfs::json_scale(report);
            if (!c_output.empty()) out.add(c_output, ftbfs::scale_csv(report));
        }

        out.flush();
        emit(doc);
        return rc;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
