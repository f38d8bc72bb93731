#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "dks/generators.hpp"
#include "dks/graph.hpp"
#include "dks/harness.hpp"
#include "dks/samplers.hpp"

namespace dks {

// Edge-list text format: first line "n m", then m lines "u v" with 0-based
// ids, u < v, sorted lexicographically, each line ending in one newline.
void write_edge_list(const Graph& g, std::ostream& os);
Graph read_edge_list(std::istream& is);
Graph read_edge_list_file(const std::string& path);

// Instance sidecar: JSON document with n, p, k, seed, planted and a note
// identifying the random generator and the seed-splitting scheme.
void write_instance_metadata(const PlantedInstance& instance, std::ostream& os);

// Trace CSV with header "iteration,density,best_density,temperature,
// accepted,region"; densities carry 17 significant digits; region is empty
// for SM/SA rows.
void write_trace_csv(const Trace& trace, std::ostream& os);
Trace read_trace_csv(std::istream& is);
Trace read_trace_csv_file(const std::string& path);

// Study summary JSON: config echo, per-replicate rows, per-algorithm
// aggregates.
void write_summary_json(const StudySummary& summary, std::ostream& os);

// Run-config document mirroring SamplerConfig + SaaConfig + the instance
// source. Unknown fields are rejected.
struct GenerateParams {
    int n = 100;
    double p = 0.05;
    int k = 10;
    std::uint64_t seed = 0;
};

struct RunConfig {
    std::optional<std::string> graph_path;
    std::optional<GenerateParams> generate;
    Algorithm algorithm = Algorithm::Sa;
    int k = 10;
    std::uint64_t iterations = 10000;
    double alpha = 0.9;
    std::uint64_t seed = 0;
    std::optional<double> target_density;
    bool stop_at_target = false;
    int saa_regions = 51;
    double saa_a_first = 0.15;
    double saa_a_last = 0.99;
    std::optional<std::vector<double>> saa_thresholds;
    std::uint64_t saa_plateau = 1500;
    double saa_base_temperature = 0.001;
};

RunConfig parse_run_config(const std::string& json_text);
SaaConfig saa_config_from_run_config(const RunConfig& rc);

}  // namespace dks
