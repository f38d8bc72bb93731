#include "dks/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "graph_detail.hpp"

namespace dks {

namespace {

void check_ids(const Graph& g, std::span<const int> nodes) {
    for (int v : nodes) {
        if (v < 0 || v >= g.node_count())
            throw std::invalid_argument("node id out of range");
    }
}

// Sorted, validated working copy of an id set.
std::vector<int> sorted_set(const Graph& g, std::span<const int> nodes) {
    check_ids(g, nodes);
    std::vector<int> out(nodes.begin(), nodes.end());
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw std::invalid_argument("duplicate node id in set");
    return out;
}

}  // namespace

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph needs a positive node count");
    std::vector<int> deg(n_, 0);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        ++deg[u];
        ++deg[v];
    }
    offsets_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
    adj_.resize(offsets_[n_]);
    std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        adj_[cursor[u]++] = v;
        adj_[cursor[v]++] = u;
    }
    for (int v = 0; v < n_; ++v) {
        const auto first = adj_.begin() + offsets_[v];
        const auto last = adj_.begin() + offsets_[v + 1];
        std::sort(first, last);
        if (std::adjacent_find(first, last) != last)
            throw std::invalid_argument("duplicate edge");
    }
    m_ = static_cast<long long>(edges.size());
}

bool Graph::has_edge(int u, int v) const {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        for (int v : neighbors(u)) {
            if (v > u) out.emplace_back(u, v);
        }
    }
    return out;
}

bool Selection::contains(int v) const {
    return std::binary_search(nodes.begin(), nodes.end(), v);
}

Selection make_selection(std::vector<int> nodes, const Graph& g) {
    if (nodes.empty()) throw std::invalid_argument("selection must be non-empty");
    check_ids(g, nodes);
    std::sort(nodes.begin(), nodes.end());
    if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end())
        throw std::invalid_argument("selection ids must be distinct");
    return Selection{std::move(nodes)};
}

long long internal_edge_count(const Graph& g, const Selection& s) {
    long long twice = 0;
    for (int u : s.nodes) {
        const auto nb = g.neighbors(u);
        auto it = s.nodes.begin();
        for (int w : nb) {
            while (it != s.nodes.end() && *it < w) ++it;
            if (it == s.nodes.end()) break;
            if (*it == w) twice++;
        }
    }
    return twice / 2;
}

double density_from_edges(long long internal_edges, int k) {
    if (k < 2) throw std::invalid_argument("density needs a selection of size >= 2");
    return 2.0 * static_cast<double>(internal_edges) /
           (static_cast<double>(k) * static_cast<double>(k - 1));
}

double edge_density(const Graph& g, const Selection& s) {
    if (s.k() < 2) throw std::invalid_argument("density needs a selection of size >= 2");
    check_ids(g, s.nodes);
    return density_from_edges(internal_edge_count(g, s), s.k());
}

namespace detail {

void neighbors_into(const Graph& g, std::span<const int> nodes, GraphScratch& ws,
                    std::vector<int>& out) {
    const std::uint64_t stamp = ws.bump();
    for (int v : nodes) ws.member_stamp[v] = stamp;
    out.clear();
    for (int u : nodes) {
        for (int w : g.neighbors(u)) {
            if (ws.member_stamp[w] != stamp && ws.seen_stamp[w] != stamp) {
                ws.seen_stamp[w] = stamp;
                out.push_back(w);
            }
        }
    }
    // Ascending order: rescan the id range when the frontier is dense
    // relative to n, sort otherwise.
    const int n = g.node_count();
    if (out.size() * 8 >= static_cast<std::size_t>(n)) {
        out.clear();
        for (int v = 0; v < n; ++v) {
            if (ws.seen_stamp[v] == stamp && ws.member_stamp[v] != stamp) out.push_back(v);
        }
    } else {
        std::sort(out.begin(), out.end());
    }
}

bool connected_within(const Graph& g, std::span<const int> nodes, GraphScratch& ws) {
    const std::uint64_t stamp = ws.bump();
    for (int v : nodes) ws.member_stamp[v] = stamp;
    ws.queue.clear();
    ws.queue.push_back(nodes[0]);
    ws.seen_stamp[nodes[0]] = stamp;
    std::size_t head = 0;
    while (head < ws.queue.size()) {
        const int u = ws.queue[head++];
        for (int w : g.neighbors(u)) {
            if (ws.member_stamp[w] == stamp && ws.seen_stamp[w] != stamp) {
                ws.seen_stamp[w] = stamp;
                ws.queue.push_back(w);
            }
        }
    }
    return ws.queue.size() == nodes.size();
}

void non_articulation_into(const Graph& g, std::span<const int> nodes, GraphScratch& ws,
                           std::vector<int>& out) {
    const int t = static_cast<int>(nodes.size());

    // Induced adjacency in local indices, gathered by merging each sorted
    // adjacency list against the sorted node set.
    ws.induced_off.assign(t + 1, 0);
    ws.induced_adj.clear();
    int min_degree = t;
    for (int i = 0; i < t; ++i) {
        const auto nb = g.neighbors(nodes[i]);
        std::size_t a = 0, b = 0;
        while (a < nb.size() && b < nodes.size()) {
            if (nb[a] < nodes[b]) {
                ++a;
            } else if (nodes[b] < nb[a]) {
                ++b;
            } else {
                ws.induced_adj.push_back(static_cast<int>(b));
                ++a;
                ++b;
            }
        }
        ws.induced_off[i + 1] = static_cast<int>(ws.induced_adj.size());
        min_degree = std::min(min_degree, ws.induced_off[i + 1] - ws.induced_off[i]);
    }

    // Dirac bound: min degree >= t/2 (t >= 3) makes the induced subgraph
    // Hamiltonian and therefore biconnected, so no node is a cut vertex.
    if (t >= 3 && 2 * min_degree >= t) {
        out.assign(nodes.begin(), nodes.end());
        return;
    }

    ws.disc.assign(t, -1);
    ws.low.assign(t, 0);
    ws.articulation.assign(t, 0);
    int timer = 0;

    // Iterative DFS computing discovery/low values and articulation points.
    struct Frame {
        int node;
        int parent;
        int next_child;
    };
    static thread_local std::vector<Frame> stack;
    stack.clear();
    stack.push_back({0, -1, 0});
    ws.disc[0] = ws.low[0] = timer++;
    int root_children = 0;
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next_child < ws.induced_off[f.node + 1] - ws.induced_off[f.node]) {
            const int w = ws.induced_adj[ws.induced_off[f.node] + f.next_child++];
            if (ws.disc[w] == -1) {
                if (f.node == 0) ++root_children;
                ws.disc[w] = ws.low[w] = timer++;
                stack.push_back({w, f.node, 0});
            } else if (w != f.parent) {
                ws.low[f.node] = std::min(ws.low[f.node], ws.disc[w]);
            }
        } else {
            const Frame finished = f;
            stack.pop_back();
            if (!stack.empty()) {
                Frame& p = stack.back();
                ws.low[p.node] = std::min(ws.low[p.node], ws.low[finished.node]);
                if (p.parent != -1 && ws.low[finished.node] >= ws.disc[p.node])
                    ws.articulation[p.node] = 1;
            }
        }
    }
    ws.articulation[0] = root_children >= 2 ? 1 : 0;

    if (timer != t) throw std::invalid_argument("induced subgraph is disconnected");

    out.clear();
    for (int i = 0; i < t; ++i) {
        if (!ws.articulation[i]) out.push_back(nodes[i]);
    }
}

long long distance_sum(const Graph& g, std::span<const int> nodes, long long penalty,
                       GraphScratch& ws) {
    long long total = 0;
    for (int src : nodes) {
        const std::uint64_t stamp = ws.bump();
        ws.queue.clear();
        ws.queue.push_back(src);
        ws.dist_stamp[src] = stamp;
        ws.dist[src] = 0;
        std::size_t head = 0;
        while (head < ws.queue.size()) {
            const int u = ws.queue[head++];
            const int du = ws.dist[u];
            for (int w : g.neighbors(u)) {
                if (ws.dist_stamp[w] != stamp) {
                    ws.dist_stamp[w] = stamp;
                    ws.dist[w] = du + 1;
                    ws.queue.push_back(w);
                }
            }
        }
        for (int dst : nodes) {
            if (dst == src) continue;
            total += ws.dist_stamp[dst] == stamp ? ws.dist[dst] : penalty;
        }
    }
    return total;
}

}  // namespace detail

std::vector<int> neighbors_of_set(const Graph& g, std::span<const int> nodes) {
    const std::vector<int> set = sorted_set(g, nodes);
    detail::GraphScratch ws(g.node_count());
    std::vector<int> out;
    detail::neighbors_into(g, set, ws, out);
    return out;
}

bool is_connected(const Graph& g, std::span<const int> nodes) {
    if (nodes.empty()) throw std::invalid_argument("connectivity of an empty set is undefined");
    const std::vector<int> set = sorted_set(g, nodes);
    detail::GraphScratch ws(g.node_count());
    return detail::connected_within(g, set, ws);
}

std::vector<int> non_articulation_nodes(const Graph& g, std::span<const int> nodes) {
    const std::vector<int> set = sorted_set(g, nodes);
    if (set.size() < 2) throw std::invalid_argument("need at least two nodes");
    detail::GraphScratch ws(g.node_count());
    std::vector<int> out;
    detail::non_articulation_into(g, set, ws, out);
    return out;
}

long long pairwise_distance_sum(const Graph& g, const Selection& s,
                                long long unreachable_penalty) {
    if (unreachable_penalty <= 0)
        throw std::invalid_argument("unreachable penalty must be positive");
    check_ids(g, s.nodes);
    detail::GraphScratch ws(g.node_count());
    return detail::distance_sum(g, s.nodes, unreachable_penalty, ws);
}

}  // namespace dks
