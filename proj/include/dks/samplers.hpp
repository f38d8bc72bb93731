#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "dks/graph.hpp"
#include "dks/rng.hpp"
#include "dks/saa.hpp"

namespace dks {

enum class Algorithm { Sm, Sa, Saa };

const char* to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct TraceRecord {
    std::uint64_t iteration = 0;  // 1-based
    double density = 0.0;         // of the state held after this iteration
    double best_density = 0.0;
    double temperature = 0.0;     // 0 for SM, which has no temperature
    bool accepted = false;
    int region = 0;               // density band of the held state; 0 for SM/SA
};

struct Trace {
    std::vector<TraceRecord> records;
};

struct ChainState {
    Selection current;
    long long current_edges = 0;
    double current_density = 0.0;
    Selection best;
    long long best_edges = 0;
    double best_density = 0.0;
    std::uint64_t iteration = 0;  // iterations executed
    Rng rng{0};                   // generator state after the run
};

struct SamplerConfig {
    Algorithm algorithm = Algorithm::Sa;
    int k = 10;
    std::uint64_t max_iterations = 10000;
    double alpha = 0.9;  // local-move probability (SA/SAA)
    std::uint64_t seed = 0;

    // Reporting target; does not stop the chain unless stop_at_target is set.
    std::optional<double> target_density;
    bool stop_at_target = false;

    // Test hooks. temperature_override replaces the per-algorithm schedule;
    // state_observer sees the held selection after every iteration.
    std::function<double(std::uint64_t)> temperature_override;
    std::function<void(std::uint64_t, const Selection&)> state_observer;
};

// Random connected start: uniform start node, then grow by uniform picks
// from the neighbor set until size k. Gives up after 1000 stalled attempts
// and throws InstanceInfeasible (see harness.hpp errors header below).
Selection init_selection(const Graph& g, int k, Rng& rng);

// Swap an outside neighbor u1 in and a non-articulation member u0 out,
// keeping the selection connected. No proposal when the selection has no
// outside neighbors or no legal u0 exists. Throws if s is disconnected.
std::optional<Selection> local_move(const Graph& g, const Selection& s, Rng& rng);

// Rebuild from scratch: uniform start outside s, then connected growth to
// size k. Retries a stalled growth with a fresh start up to 100 times, then
// reports no proposal. Throws for k >= node count.
std::optional<Selection> global_move(const Graph& g, const Selection& s, int k, Rng& rng);

// SM swap: uniform u0 from s, uniform u1 from the neighbors of s \ {u0}
// excluding all of s; when that set is empty, u1 is drawn uniformly from
// V \ s instead; when even that is empty, returns s unchanged.
Selection sm_swap_move(const Graph& g, const Selection& s, Rng& rng);

// SM diversification: replace a uniform member with a uniform node having no
// edge into s. Applied without an acceptance test; no such node, no change.
Selection sm_ninth_step(const Graph& g, const Selection& s, Rng& rng);

// min{1, exp(-(l_new - l_old)/k)} on the pairwise-distance objective.
double sm_accept_probability(long long l_new, long long l_old, int k);
bool sm_accept(long long l_new, long long l_old, int k, Rng& rng);

// min{1, exp((d_new - d_old)/t)}. Throws for t <= 0.
double metropolis_accept_probability(double d_new, double d_old, double t);
bool metropolis_accept_density(double d_new, double d_old, double t, Rng& rng);

// 0.001^(l/1000); l = 0 gives 1.
double geometric_temperature(std::uint64_t l);

struct ChainResult {
    Trace trace;
    ChainState state;
};

// Runs max_iterations of the configured algorithm and records one trace row
// per iteration. saa_cfg is required for Algorithm::Saa and ignored
// otherwise. Results are a pure function of (g, cfg, saa_cfg).
ChainResult run_chain(const Graph& g, const SamplerConfig& cfg,
                      const std::optional<SaaConfig>& saa_cfg = std::nullopt);

}  // namespace dks
