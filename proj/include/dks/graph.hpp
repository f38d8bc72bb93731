#pragma once

#include <span>
#include <utility>
#include <vector>

namespace dks {

// Immutable undirected simple graph over node ids 0..n-1. Adjacency lists
// are sorted ascending, so every query below has a deterministic result and
// seeded runs are bit-identical across platforms. Safe to share between
// concurrently running chains.
class Graph {
public:
    Graph() = default;

    // Validates: endpoints in range, no self-loops, no duplicate edges.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int node_count() const { return n_; }
    long long edge_count() const { return m_; }

    std::span<const int> neighbors(int v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(int u, int v) const;

    // Edges as (u, v) pairs with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<int> offsets_;  // CSR offsets, size n_+1
    std::vector<int> adj_;
};

// An ordered set of k distinct node ids; the state a chain moves through.
struct Selection {
    std::vector<int> nodes;  // sorted ascending, distinct

    int k() const { return static_cast<int>(nodes.size()); }
    bool contains(int v) const;
    bool operator==(const Selection&) const = default;
};

// Sorts and validates (distinct ids, each < g.node_count()).
Selection make_selection(std::vector<int> nodes, const Graph& g);

// Number of edges of g with both endpoints in s.
long long internal_edge_count(const Graph& g, const Selection& s);

// 2*m_S / (k*(k-1)). Throws for k < 2.
double edge_density(const Graph& g, const Selection& s);
double density_from_edges(long long internal_edges, int k);

// { v not in nodes : v adjacent to some member }, ascending.
std::vector<int> neighbors_of_set(const Graph& g, std::span<const int> nodes);

// True iff the subgraph induced by nodes is connected. Throws on empty input.
bool is_connected(const Graph& g, std::span<const int> nodes);

// Every v in nodes whose removal keeps the induced subgraph connected,
// ascending. Uses articulation-point analysis; throws if the induced
// subgraph is disconnected or |nodes| < 2.
std::vector<int> non_articulation_nodes(const Graph& g, std::span<const int> nodes);

// Sum over ordered pairs (i, j) of selected nodes of the shortest-path
// length between them in the full graph (paths may leave the selection);
// unreachable pairs contribute unreachable_penalty. BFS from each member.
long long pairwise_distance_sum(const Graph& g, const Selection& s,
                                long long unreachable_penalty);

}  // namespace dks
