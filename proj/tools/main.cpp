// dks: generate planted-clique benchmark graphs, run SM/SA/SAA chains over
// them, replicate full studies, query the brute-force oracle, and plot
// traces. Exit codes: 0 success, 1 runtime failure, 2 usage error,
// 3 refused by the enumeration cap.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "dks/errors.hpp"
#include "dks/generators.hpp"
#include "dks/harness.hpp"
#include "dks/io.hpp"
#include "dks/plot.hpp"
#include "dks/samplers.hpp"

namespace {

struct SaaFlags {
    int regions = 51;
    double a_first = 0.15;
    double a_last = 0.99;
    std::uint64_t plateau = 1500;
    double base_temperature = 0.001;
};

void add_saa_flags(CLI::App* cmd, SaaFlags& f) {
    cmd->add_option("--saa-regions", f.regions, "SAA: number of density regions N")
        ->capture_default_str()
        ->check(CLI::Range(3, 100000));
    cmd->add_option("--saa-a-first", f.a_first, "SAA: lowest density threshold a_1")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--saa-a-last", f.a_last, "SAA: highest density threshold a_{N-1}")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--saa-plateau", f.plateau,
                    "SAA: iterations before temperature and gain start to decay")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--saa-base-temp", f.base_temperature, "SAA: plateau temperature")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
}

dks::SaaConfig to_saa_config(const SaaFlags& f) {
    dks::SaaConfig cfg;
    cfg.partition = dks::default_partition(f.regions, f.a_first, f.a_last);
    cfg.pi = dks::desired_distribution(f.regions);
    cfg.theta_init.assign(f.regions, 0.0);
    cfg.plateau = f.plateau;
    cfg.base_temperature = f.base_temperature;
    return cfg;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    return os;
}

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
    int n = 100;
    double p = 0.05;
    int k = 10;  // 0 disables planting
    std::uint64_t seed = 0;
    std::string out;
};

int cmd_generate(const GenerateArgs& a) {
    const dks::PlantedInstance instance =
        dks::make_planted_instance(a.n, a.p, a.k, a.seed);
    {
        auto os = open_output(a.out);
        dks::write_edge_list(instance.graph, os);
    }
    {
        auto os = open_output(a.out + ".meta.json");
        dks::write_instance_metadata(instance, os);
    }
    std::cout << "n " << instance.graph.node_count() << "\n";
    std::cout << "m " << instance.graph.edge_count() << "\n";
    std::cout << "planted";
    for (int v : instance.planted) std::cout << ' ' << v;
    std::cout << "\n";
    return 0;
}

// --------------------------------------------------------------------- run

struct RunArgs {
    std::string graph;
    std::string config;
    std::string algo = "sa";
    int k = 10;
    std::uint64_t iters = 10000;
    double alpha = 0.9;
    std::uint64_t seed = 0;
    double target_density = 1.0;
    bool stop_at_target = false;
    std::string trace_out;
    SaaFlags saa;
};

int cmd_run(const RunArgs& a, const CLI::App* cmd) {
    dks::RunConfig rc;
    if (!a.config.empty()) {
        std::ifstream is(a.config);
        if (!is) throw std::runtime_error("cannot open " + a.config);
        std::stringstream buffer;
        buffer << is.rdbuf();
        rc = dks::parse_run_config(buffer.str());
    }
    // Explicit flags take precedence over the config document.
    if (cmd->count("--graph")) rc.graph_path = a.graph;
    if (cmd->count("--algo")) rc.algorithm = *dks::parse_algorithm(a.algo);
    if (cmd->count("--k")) rc.k = a.k;
    if (cmd->count("--iters")) rc.iterations = a.iters;
    if (cmd->count("--alpha")) rc.alpha = a.alpha;
    if (cmd->count("--seed")) rc.seed = a.seed;
    if (cmd->count("--target-density")) rc.target_density = a.target_density;
    if (cmd->count("--stop-at-target")) rc.stop_at_target = true;
    if (cmd->count("--saa-regions")) rc.saa_regions = a.saa.regions;
    if (cmd->count("--saa-a-first")) rc.saa_a_first = a.saa.a_first;
    if (cmd->count("--saa-a-last")) rc.saa_a_last = a.saa.a_last;
    if (cmd->count("--saa-plateau")) rc.saa_plateau = a.saa.plateau;
    if (cmd->count("--saa-base-temp")) rc.saa_base_temperature = a.saa.base_temperature;

    dks::Graph graph;
    if (rc.graph_path) {
        graph = dks::read_edge_list_file(*rc.graph_path);
    } else if (rc.generate) {
        const auto& gp = *rc.generate;
        graph = dks::make_planted_instance(gp.n, gp.p, gp.k, gp.seed).graph;
    } else {
        return usage_error("run needs --graph (or a config with a graph/generate source)");
    }

    dks::SamplerConfig sc;
    sc.algorithm = rc.algorithm;
    sc.k = rc.k;
    sc.max_iterations = rc.iterations;
    sc.alpha = rc.alpha;
    sc.seed = rc.seed;
    sc.target_density = rc.target_density ? rc.target_density : std::optional<double>(1.0);
    sc.stop_at_target = rc.stop_at_target;

    std::optional<dks::SaaConfig> saa;
    if (rc.algorithm == dks::Algorithm::Saa) saa = dks::saa_config_from_run_config(rc);

    const dks::ChainResult result = dks::run_chain(graph, sc, saa);
    if (!a.trace_out.empty()) {
        auto os = open_output(a.trace_out);
        dks::write_trace_csv(result.trace, os);
    }
    const auto hit = dks::first_hit_iteration(result.trace, *sc.target_density);
    char density_buf[40];
    std::snprintf(density_buf, sizeof(density_buf), "%.17g", result.state.best_density);
    std::cout << "best_density " << density_buf << "\n";
    std::cout << "first_hit ";
    if (hit)
        std::cout << *hit << "\n";
    else
        std::cout << "none\n";
    return 0;
}

// ------------------------------------------------------------------- bench

struct BenchArgs {
    int replicates = 100;
    int n = 100;
    double p = 0.05;
    int k = 10;
    std::uint64_t iters = 10000;
    std::string algos = "sm,sa,saa";
    std::uint64_t seed = 0;
    double alpha = 0.9;
    int jobs = 1;
    bool stop_when_found = false;
    std::string out;
    SaaFlags saa;
};

int cmd_bench(const BenchArgs& a) {
    std::vector<dks::Algorithm> algorithms;
    std::stringstream ss(a.algos);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        const auto algo = dks::parse_algorithm(token);
        if (!algo) return usage_error("unknown algorithm \"" + token + "\" in --algos");
        algorithms.push_back(*algo);
    }
    if (algorithms.empty()) return usage_error("--algos must name at least one of sm, sa, saa");

    dks::StudyConfig cfg;
    cfg.replicates = a.replicates;
    cfg.n = a.n;
    cfg.p = a.p;
    cfg.k = a.k;
    cfg.max_iterations = a.iters;
    cfg.algorithms = algorithms;
    cfg.master_seed = a.seed;
    cfg.alpha = a.alpha;
    cfg.saa = to_saa_config(a.saa);
    cfg.jobs = a.jobs;
    cfg.stop_when_found = a.stop_when_found;

    const dks::StudySummary summary = dks::run_replication_study(cfg);
    if (!a.out.empty()) {
        auto os = open_output(a.out);
        dks::write_summary_json(summary, os);
    }

    std::printf("%-10s %11s %18s %19s\n", "algorithm", "successes", "median_first_hit",
                "mean_wall_seconds");
    for (const auto& [algo, agg] : summary.aggregates) {
        const std::string successes =
            std::to_string(agg.success_count) + "/" + std::to_string(cfg.replicates);
        std::string median = "-";
        if (agg.median_first_hit) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.1f", *agg.median_first_hit);
            median = buf;
        }
        std::printf("%-10s %11s %18s %19.6f\n", dks::to_string(algo), successes.c_str(),
                    median.c_str(), agg.mean_wall_seconds);
    }
    return 0;
}

// ------------------------------------------------------------------ oracle

struct OracleArgs {
    std::string graph;
    int k = 4;
    std::uint64_t cap = 10'000'000;
};

int cmd_oracle(const OracleArgs& a) {
    const dks::Graph graph = dks::read_edge_list_file(a.graph);
    const dks::OracleResult result = dks::brute_force_densest(graph, a.k, a.cap);
    std::printf("%.6f", result.max_density);
    for (int v : result.witness.nodes) std::printf(" %d", v);
    std::printf("\n");
    return 0;
}

// -------------------------------------------------------------------- plot

struct PlotArgs {
    std::string trace;
    std::string out;
};

int cmd_plot(const PlotArgs& a) {
    const dks::Trace trace = dks::read_trace_csv_file(a.trace);
    auto os = open_output(a.out);
    os << dks::render_trace_svg(trace);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo search for the densest fixed-size subgraph"};
    app.require_subcommand(1);

    GenerateArgs gen;
    CLI::App* generate = app.add_subcommand(
        "generate", "Write a seeded random graph with an optional planted clique");
    generate->add_option("--n", gen.n, "node count")->capture_default_str()->check(CLI::PositiveNumber);
    generate->add_option("--p", gen.p, "edge probability")->capture_default_str()->check(CLI::Range(0.0, 1.0));
    generate->add_option("--k", gen.k, "planted clique size (0 disables planting)")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    generate->add_option("--seed", gen.seed, "master seed")->capture_default_str();
    generate->add_option("--out", gen.out, "edge-list output path (metadata goes to <out>.meta.json)")
        ->required();

    RunArgs run;
    CLI::App* run_cmd = app.add_subcommand("run", "Run one chain and write its trace CSV");
    run_cmd->add_option("--graph", run.graph, "edge-list input path");
    run_cmd->add_option("--config", run.config, "run-config JSON document (flags override it)");
    run_cmd->add_option("--algo", run.algo, "algorithm: sm, sa or saa")
        ->capture_default_str()
        ->check(CLI::IsMember({"sm", "sa", "saa"}));
    run_cmd->add_option("--k", run.k, "subgraph size")->capture_default_str()->check(CLI::Range(2, 1000000));
    run_cmd->add_option("--iters", run.iters, "iteration budget")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    run_cmd->add_option("--alpha", run.alpha, "local-move probability (sa/saa)")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    run_cmd->add_option("--seed", run.seed, "chain seed")->capture_default_str();
    run_cmd->add_option("--target-density", run.target_density, "density for first-hit reporting")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    run_cmd->add_flag("--stop-at-target", run.stop_at_target,
                      "stop as soon as the target density is reached");
    run_cmd->add_option("--trace-out", run.trace_out, "trace CSV output path");
    add_saa_flags(run_cmd, run.saa);

    BenchArgs bench;
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "Run a replication study and write its summary JSON");
    bench_cmd->add_option("--replicates", bench.replicates, "replicate count")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--n", bench.n, "node count")->capture_default_str()->check(CLI::PositiveNumber);
    bench_cmd->add_option("--p", bench.p, "edge probability")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    bench_cmd->add_option("--k", bench.k, "planted clique and subgraph size")
        ->capture_default_str()
        ->check(CLI::Range(2, 1000000));
    bench_cmd->add_option("--iters", bench.iters, "iterations per chain")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--algos", bench.algos, "comma-separated subset of sm,sa,saa")
        ->capture_default_str();
    bench_cmd->add_option("--seed", bench.seed, "master seed")->capture_default_str();
    bench_cmd->add_option("--alpha", bench.alpha, "local-move probability (sa/saa)")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    bench_cmd->add_option("--jobs", bench.jobs, "parallel replicates (content is jobs-independent)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    bench_cmd->add_flag("--stop-when-found", bench.stop_when_found,
                        "stop each chain at density 1; wall times then measure "
                        "time-to-identification instead of the full budget");
    bench_cmd->add_option("--out", bench.out, "summary JSON output path");
    add_saa_flags(bench_cmd, bench.saa);

    OracleArgs oracle;
    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "Exact densest k-subgraph by exhaustive enumeration");
    oracle_cmd->add_option("--graph", oracle.graph, "edge-list input path")->required();
    oracle_cmd->add_option("--k", oracle.k, "subgraph size")
        ->capture_default_str()
        ->check(CLI::Range(2, 1000000));
    oracle_cmd->add_option("--cap", oracle.cap, "maximum number of subsets to enumerate")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    PlotArgs plot;
    CLI::App* plot_cmd = app.add_subcommand("plot", "Render a trace CSV as a static SVG");
    plot_cmd->add_option("--trace", plot.trace, "trace CSV input path")->required();
    plot_cmd->add_option("--out", plot.out, "SVG output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(generate)) return cmd_generate(gen);
        if (app.got_subcommand(run_cmd)) return cmd_run(run, run_cmd);
        if (app.got_subcommand(bench_cmd)) return cmd_bench(bench);
        if (app.got_subcommand(oracle_cmd)) return cmd_oracle(oracle);
        if (app.got_subcommand(plot_cmd)) return cmd_plot(plot);
    } catch (const dks::EnumerationCapExceeded& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 3;
    } catch (const dks::ParseError& e) {
        std::cerr << "error at line " << e.line() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
