#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dks/graph.hpp"

namespace dks::detail {

// Reusable buffers for the samplers' inner loop. Mark arrays are stamp-based
// so reuse costs nothing; every helper leaves the scratch ready for the next
// call. One scratch belongs to one chain; never share across threads.
struct GraphScratch {
    explicit GraphScratch(int n)
        : member_stamp(n, 0), seen_stamp(n, 0), dist_stamp(n, 0), dist(n, 0) {}

    std::uint64_t bump() { return ++stamp; }

    std::vector<std::uint64_t> member_stamp;
    std::vector<std::uint64_t> seen_stamp;
    std::vector<std::uint64_t> dist_stamp;
    std::vector<int> dist;
    std::vector<int> queue;
    std::vector<int> induced_off;
    std::vector<int> induced_adj;
    std::vector<int> disc;
    std::vector<int> low;
    std::vector<char> articulation;
    std::uint64_t stamp = 0;
};

// The functions below assume ids are valid for g and `nodes` is sorted
// ascending with no duplicates; the public wrappers in graph.cpp validate.

// Distinct outside neighbors of `nodes`, ascending, into `out`.
void neighbors_into(const Graph& g, std::span<const int> nodes, GraphScratch& ws,
                    std::vector<int>& out);

// Connectivity of the induced subgraph; `nodes` must be non-empty.
bool connected_within(const Graph& g, std::span<const int> nodes, GraphScratch& ws);

// Non-cut vertices of the induced subgraph, ascending, into `out`. Requires
// |nodes| >= 2; throws std::invalid_argument when the subgraph is
// disconnected.
void non_articulation_into(const Graph& g, std::span<const int> nodes, GraphScratch& ws,
                           std::vector<int>& out);

// Sum of full-graph BFS distances over ordered pairs of `nodes`, with
// `penalty` for unreachable pairs.
long long distance_sum(const Graph& g, std::span<const int> nodes, long long penalty,
                       GraphScratch& ws);

}  // namespace dks::detail
