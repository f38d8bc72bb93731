#pragma once

#include <cstdint>
#include <vector>

#include "dks/graph.hpp"

namespace dks {

// A benchmark instance: random background graph with a known clique forced
// onto `planted`, so the densest k-subgraph optimum is known by construction.
struct PlantedInstance {
    Graph graph;
    std::vector<int> planted;  // sorted ids; empty when planting is disabled
    double p = 0.0;
    std::uint64_t seed = 0;
};

// G(n, p): each of the n(n-1)/2 unordered pairs is included independently
// with probability p. Deterministic in (n, p, seed); see rng.hpp for the
// generator. Throws for p outside [0, 1].
Graph erdos_renyi(int n, double p, std::uint64_t seed);

// Chooses k distinct nodes uniformly at random and adds every missing edge
// among them. Never removes edges. Throws for k < 1 or k > n. The p field
// of the result is left 0; make_planted_instance fills it.
PlantedInstance plant_clique(const Graph& g, int k, std::uint64_t seed);

// The full recipe behind one master seed: erdos_renyi(n, p, master_seed)
// followed by plant_clique with seed master_seed + 1. k = 0 disables
// planting.
PlantedInstance make_planted_instance(int n, double p, int k, std::uint64_t master_seed);

}  // namespace dks
