#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dks/generators.hpp"
#include "dks/graph.hpp"
#include "dks/samplers.hpp"

namespace dks {

struct OracleResult {
    double max_density = 0.0;
    long long max_edges = 0;
    Selection witness;  // lexicographically smallest maximizer
};

// Exact maximum by enumerating all k-subsets. Refuses (throws
// EnumerationCapExceeded) when C(n, k) exceeds the cap.
OracleResult brute_force_densest(const Graph& g, int k,
                                 std::uint64_t cap = 10'000'000);

// Smallest iteration whose best density reaches target - 1e-12.
std::optional<std::uint64_t> first_hit_iteration(const Trace& trace, double target);

struct StudyConfig {
    int replicates = 100;
    int n = 100;
    double p = 0.05;
    int k = 10;
    std::uint64_t max_iterations = 10000;
    std::vector<Algorithm> algorithms{Algorithm::Sm, Algorithm::Sa, Algorithm::Saa};
    std::uint64_t master_seed = 0;
    double alpha = 0.9;
    SaaConfig saa;  // used by SAA chains
    int jobs = 1;   // replicate-level parallelism; results are jobs-independent

    // Opt-in: stop each chain once it has identified a full clique, so wall
    // times measure time-to-identification. Success flags, first-hit
    // iterations and best densities are identical either way; only the
    // wall-time column changes meaning.
    bool stop_when_found = false;

    StudyConfig() : saa(default_saa_config()) {}
};

struct ReplicateRow {
    int replicate = 0;  // 1-based
    Algorithm algorithm = Algorithm::Sm;
    bool success = false;  // best selection closed a full clique (integer edge count)
    std::optional<std::uint64_t> first_hit;
    double wall_seconds = 0.0;
    double best_density = 0.0;
    std::string error;  // non-empty when the replicate failed to run
};

struct AlgorithmAggregate {
    int success_count = 0;
    std::optional<double> median_first_hit;
    double mean_wall_seconds = 0.0;
};

struct StudySummary {
    StudyConfig config;
    std::vector<ReplicateRow> rows;  // replicate-major, algorithm order as configured
    std::vector<std::pair<Algorithm, AlgorithmAggregate>> aggregates;
};

// Seed scheme: replicate r uses instance seed master + r (the generator
// itself consumes master + r and master + r + 1, see generators.hpp) and
// chain seed master + r + algorithm offset below.
std::uint64_t algorithm_seed_offset(Algorithm a);

// Builds one planted instance per replicate and runs every configured
// algorithm on it. Infeasible replicates become failure rows, not crashes.
StudySummary run_replication_study(const StudyConfig& cfg);

}  // namespace dks
