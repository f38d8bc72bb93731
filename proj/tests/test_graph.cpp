#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "dks/graph.hpp"
#include "dks/rng.hpp"

using namespace dks;

namespace {

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Selection all_nodes_selection(const Graph& g) {
    std::vector<int> ids(g.node_count());
    std::iota(ids.begin(), ids.end(), 0);
    return make_selection(std::move(ids), g);
}

// Independent oracle for non_articulation_nodes: remove each node in turn
// and test connectivity of the remainder.
std::vector<int> naive_non_articulation(const Graph& g, const std::vector<int>& nodes) {
    std::vector<int> out;
    for (int v : nodes) {
        std::vector<int> rest;
        for (int w : nodes)
            if (w != v) rest.push_back(w);
        if (is_connected(g, rest)) out.push_back(v);
    }
    return out;
}

Graph random_graph(int n, double p, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_unit() < p) edges.emplace_back(u, v);
    return Graph(n, edges);
}

// Random connected induced subset grown node by node.
std::vector<int> random_connected_subset(const Graph& g, int size, Rng& rng) {
    const int n = g.node_count();
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<int> grown{static_cast<int>(rng.next_below(n))};
        while (static_cast<int>(grown.size()) < size) {
            const auto frontier = neighbors_of_set(g, grown);
            if (frontier.empty()) break;
            grown.push_back(frontier[rng.next_below(frontier.size())]);
            std::sort(grown.begin(), grown.end());
        }
        if (static_cast<int>(grown.size()) == size) return grown;
    }
    return {};
}

}  // namespace

TEST_CASE("graph construction validates its input") {
    CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {0, 1}}), std::invalid_argument);

    const Graph g(4, {{2, 3}, {0, 1}, {1, 2}});
    CHECK(g.node_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("edge density on the canonical small cases") {
    const Graph k10 = complete_graph(10);
    CHECK(edge_density(k10, all_nodes_selection(k10)) == 1.0);

    const Graph empty10(10, {});
    CHECK(edge_density(empty10, all_nodes_selection(empty10)) == 0.0);

    const Graph tree10 = path_graph(10);  // 9 internal edges
    CHECK(edge_density(tree10, all_nodes_selection(tree10)) == doctest::Approx(0.2).epsilon(1e-15));

    const Graph pair(2, {});
    CHECK_THROWS_AS(edge_density(pair, Selection{{0}}), std::invalid_argument);
}

TEST_CASE("edge density is invariant under node relabeling") {
    Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 6 + static_cast<int>(rng.next_below(10));
        const Graph g = random_graph(n, 0.4, rng);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.next_below(i + 1)]);

        std::vector<std::pair<int, int>> relabeled;
        for (auto [u, v] : g.edges()) {
            const int a = perm[u], b = perm[v];
            relabeled.emplace_back(std::min(a, b), std::max(a, b));
        }
        const Graph h(n, relabeled);

        const int k = 2 + static_cast<int>(rng.next_below(n - 2));
        std::vector<int> ids(n);
        std::iota(ids.begin(), ids.end(), 0);
        for (int i = 0; i < k; ++i)
            std::swap(ids[i], ids[i + rng.next_below(n - i)]);
        std::vector<int> sel(ids.begin(), ids.begin() + k);
        std::vector<int> mapped;
        for (int v : sel) mapped.push_back(perm[v]);

        CHECK(edge_density(g, make_selection(sel, g)) ==
              edge_density(h, make_selection(mapped, h)));
    }
}

TEST_CASE("density bounds and the clique characterization") {
    Rng rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 4 + static_cast<int>(rng.next_below(12));
        const Graph g = random_graph(n, 0.3 + 0.4 * rng.next_unit(), rng);
        const int k = 2 + static_cast<int>(rng.next_below(n - 1));
        std::vector<int> ids(n);
        std::iota(ids.begin(), ids.end(), 0);
        for (int i = 0; i < k; ++i)
            std::swap(ids[i], ids[i + rng.next_below(n - i)]);
        const Selection s = make_selection({ids.begin(), ids.begin() + k}, g);

        const double d = edge_density(g, s);
        CHECK(d >= 0.0);
        CHECK(d <= 1.0);
        const bool complete =
            internal_edge_count(g, s) == static_cast<long long>(k) * (k - 1) / 2;
        CHECK((d == 1.0) == complete);
    }
}

TEST_CASE("neighbors_of_set basics") {
    const Graph path = path_graph(3);
    CHECK(neighbors_of_set(path, std::vector<int>{0}) == std::vector<int>{1});

    const Graph triangle = complete_graph(3);
    CHECK(neighbors_of_set(triangle, std::vector<int>{0, 1}) == std::vector<int>{2});

    const Graph with_isolated(4, {{0, 1}});
    CHECK(neighbors_of_set(with_isolated, std::vector<int>{2, 3}).empty());
    CHECK(neighbors_of_set(with_isolated, std::vector<int>{}).empty());
}

TEST_CASE("neighbors_of_set never returns members of the input") {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + static_cast<int>(rng.next_below(20));
        const Graph g = random_graph(n, 0.3, rng);
        const int size = 1 + static_cast<int>(rng.next_below(n));
        std::vector<int> ids(n);
        std::iota(ids.begin(), ids.end(), 0);
        for (int i = 0; i < size; ++i)
            std::swap(ids[i], ids[i + rng.next_below(n - i)]);
        std::vector<int> nodes(ids.begin(), ids.begin() + size);
        const auto result = neighbors_of_set(g, nodes);
        CHECK(std::is_sorted(result.begin(), result.end()));
        std::sort(nodes.begin(), nodes.end());
        for (int v : result) CHECK(!std::binary_search(nodes.begin(), nodes.end(), v));
    }
}

TEST_CASE("is_connected") {
    const Graph triangle = complete_graph(3);
    CHECK(is_connected(triangle, std::vector<int>{0, 1, 2}));

    const Graph two_parts(4, {{0, 1}, {2, 3}});
    CHECK(!is_connected(two_parts, std::vector<int>{0, 2}));
    CHECK(is_connected(two_parts, std::vector<int>{0}));
    CHECK_THROWS_AS(is_connected(two_parts, std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("non_articulation_nodes on the canonical shapes") {
    const Graph path = path_graph(3);
    CHECK(non_articulation_nodes(path, std::vector<int>{0, 1, 2}) == std::vector<int>{0, 2});

    const Graph triangle = complete_graph(3);
    CHECK(non_articulation_nodes(triangle, std::vector<int>{0, 1, 2}) ==
          std::vector<int>{0, 1, 2});

    // Star: center 0, leaves 1..3.
    const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(non_articulation_nodes(star, std::vector<int>{0, 1, 2, 3}) ==
          std::vector<int>{1, 2, 3});

    const Graph disconnected(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(non_articulation_nodes(disconnected, std::vector<int>{0, 1, 2, 3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(non_articulation_nodes(star, std::vector<int>{0}), std::invalid_argument);
}

TEST_CASE("non_articulation_nodes agrees with the naive removal oracle") {
    Rng rng(99);
    int done = 0;
    while (done < 1000) {
        const int n = 5 + static_cast<int>(rng.next_below(26));  // n <= 30
        const Graph g = random_graph(n, 0.15 + 0.25 * rng.next_unit(), rng);
        const int size = 2 + static_cast<int>(rng.next_below(std::min(n - 1, 12)));
        const std::vector<int> nodes = random_connected_subset(g, size, rng);
        if (nodes.empty()) continue;
        CHECK(non_articulation_nodes(g, nodes) == naive_non_articulation(g, nodes));
        ++done;
    }
}

TEST_CASE("pairwise distance sums") {
    const Graph triangle = complete_graph(3);
    CHECK(pairwise_distance_sum(triangle, all_nodes_selection(triangle), 100) == 6);

    const Graph k10 = complete_graph(10);
    CHECK(pairwise_distance_sum(k10, all_nodes_selection(k10), 100) == 90);

    const Graph split(2, {});
    CHECK(pairwise_distance_sum(split, all_nodes_selection(split), 100) == 200);

    CHECK_THROWS_AS(pairwise_distance_sum(split, all_nodes_selection(split), 0),
                    std::invalid_argument);
}

TEST_CASE("pairwise distance sum pairs up symmetrically") {
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 4 + static_cast<int>(rng.next_below(16));
        const Graph g = random_graph(n, 0.2, rng);
        const int k = 2 + static_cast<int>(rng.next_below(n - 1));
        std::vector<int> ids(n);
        std::iota(ids.begin(), ids.end(), 0);
        for (int i = 0; i < k; ++i)
            std::swap(ids[i], ids[i + rng.next_below(n - i)]);
        const Selection s = make_selection({ids.begin(), ids.begin() + k}, g);
        const long long total = pairwise_distance_sum(g, s, n);
        CHECK(total % 2 == 0);
        CHECK(total >= 0);
    }
}

TEST_CASE("a clique selection inside a larger graph sums to k(k-1)") {
    // K5 on nodes 0..4 plus a pendant path.
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) edges.emplace_back(u, v);
    edges.emplace_back(4, 5);
    edges.emplace_back(5, 6);
    const Graph g(7, edges);
    const Selection s = make_selection({0, 1, 2, 3, 4}, g);
    CHECK(pairwise_distance_sum(g, s, g.node_count()) == 5 * 4);
    CHECK(edge_density(g, s) == 1.0);
}

TEST_CASE("selection validation") {
    const Graph g = path_graph(4);
    CHECK_THROWS_AS(make_selection({0, 0}, g), std::invalid_argument);
    CHECK_THROWS_AS(make_selection({0, 4}, g), std::invalid_argument);
    CHECK_THROWS_AS(make_selection({}, g), std::invalid_argument);
    CHECK(make_selection({3, 1}, g).nodes == std::vector<int>{1, 3});
}
