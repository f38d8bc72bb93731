#include "dks/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dks/rng.hpp"

namespace dks {

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("node count must be positive");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("edge probability must lie in [0, 1]");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.next_bernoulli(p)) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

PlantedInstance plant_clique(const Graph& g, int k, std::uint64_t seed) {
    const int n = g.node_count();
    if (k < 1) throw std::invalid_argument("clique size must be positive");
    if (k > n) throw std::invalid_argument("clique size exceeds node count");

    // Uniform k-subset via partial Fisher-Yates.
    Rng rng(seed);
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    for (int i = 0; i < k; ++i) {
        const auto j = i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - i)));
        std::swap(ids[i], ids[j]);
    }
    std::vector<int> planted(ids.begin(), ids.begin() + k);
    std::sort(planted.begin(), planted.end());

    auto edges = g.edges();
    for (std::size_t a = 0; a < planted.size(); ++a) {
        for (std::size_t b = a + 1; b < planted.size(); ++b) {
            if (!g.has_edge(planted[a], planted[b]))
                edges.emplace_back(planted[a], planted[b]);
        }
    }
    std::sort(edges.begin(), edges.end());
    PlantedInstance out;
    out.graph = Graph(n, edges);
    out.planted = std::move(planted);
    out.seed = seed;
    return out;
}

PlantedInstance make_planted_instance(int n, double p, int k, std::uint64_t master_seed) {
    Graph g = erdos_renyi(n, p, master_seed);
    if (k == 0) {
        PlantedInstance out;
        out.graph = std::move(g);
        out.p = p;
        out.seed = master_seed;
        return out;
    }
    PlantedInstance out = plant_clique(g, k, master_seed + 1);
    out.p = p;
    out.seed = master_seed;
    return out;
}

}  // namespace dks
