#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "dks/generators.hpp"
#include "dks/graph.hpp"

using namespace dks;

namespace {

// Central interval of Binomial(n, p) covering `mass`, computed from the pmf
// directly (log-space running product); independent of the generator code.
std::pair<long, long> binomial_central_interval(long n, double p, double mass) {
    const double tail = (1.0 - mass) / 2.0;
    std::vector<double> log_pmf(n + 1);
    for (long x = 0; x <= n; ++x) {
        log_pmf[x] = std::lgamma(n + 1.0) - std::lgamma(x + 1.0) - std::lgamma(n - x + 1.0) +
                     x * std::log(p) + (n - x) * std::log1p(-p);
    }
    double cdf = 0.0;
    long lo = -1, hi = -1;
    for (long x = 0; x <= n; ++x) {
        cdf += std::exp(log_pmf[x]);
        if (lo < 0 && cdf >= tail) lo = x;
        if (hi < 0 && cdf >= 1.0 - tail) hi = x;
    }
    if (hi < 0) hi = n;
    return {lo, hi};
}

}  // namespace

TEST_CASE("erdos_renyi degenerate probabilities") {
    CHECK(erdos_renyi(10, 0.0, 7).edge_count() == 0);
    CHECK(erdos_renyi(10, 1.0, 7).edge_count() == 45);
    CHECK_THROWS_AS(erdos_renyi(10, -0.1, 7), std::invalid_argument);
    CHECK_THROWS_AS(erdos_renyi(10, 1.5, 7), std::invalid_argument);
    CHECK_THROWS_AS(erdos_renyi(0, 0.5, 7), std::invalid_argument);
}

TEST_CASE("erdos_renyi mean edge count sits inside the binomial 99% band") {
    const auto [lo, hi] = binomial_central_interval(4950, 0.05, 0.99);
    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 200; ++seed)
        total += static_cast<double>(erdos_renyi(100, 0.05, seed).edge_count());
    const double mean = total / 200.0;
    CHECK(mean >= static_cast<double>(lo));
    CHECK(mean <= static_cast<double>(hi));
}

TEST_CASE("erdos_renyi is deterministic in the seed") {
    const Graph a = erdos_renyi(60, 0.1, 123456);
    const Graph b = erdos_renyi(60, 0.1, 123456);
    CHECK(a.edges() == b.edges());
    const Graph c = erdos_renyi(60, 0.1, 123457);
    CHECK(a.edges() != c.edges());
}

TEST_CASE("plant_clique forces a clique and never removes edges") {
    const Graph empty(10, {});
    const PlantedInstance tri = plant_clique(empty, 3, 9);
    CHECK(tri.graph.edge_count() == 3);
    CHECK(tri.planted.size() == 3);
    CHECK(edge_density(tri.graph, Selection{tri.planted}) == 1.0);

    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) all.emplace_back(u, v);
    const Graph complete(6, all);
    const PlantedInstance five = plant_clique(complete, 5, 11);
    CHECK(five.graph.edge_count() == complete.edge_count());
    CHECK(edge_density(five.graph, Selection{five.planted}) == 1.0);

    CHECK_THROWS_AS(plant_clique(empty, 11, 1), std::invalid_argument);
    CHECK_THROWS_AS(plant_clique(empty, 0, 1), std::invalid_argument);
}

TEST_CASE("planting preserves the background edges") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = erdos_renyi(40, 0.1, seed);
        const PlantedInstance inst = plant_clique(g, 6, seed + 1000);
        for (auto [u, v] : g.edges()) CHECK(inst.graph.has_edge(u, v));
        CHECK(edge_density(inst.graph, Selection{inst.planted}) == 1.0);
    }
}

TEST_CASE("make_planted_instance is deterministic and density-1 on the planted set") {
    const PlantedInstance a = make_planted_instance(100, 0.05, 10, 42);
    const PlantedInstance b = make_planted_instance(100, 0.05, 10, 42);
    CHECK(a.graph.edges() == b.graph.edges());
    CHECK(a.planted == b.planted);
    CHECK(a.p == 0.05);
    CHECK(a.seed == 42);
    CHECK(edge_density(a.graph, Selection{a.planted}) == 1.0);

    // p = 0: exactly the k(k-1)/2 planted edges.
    const PlantedInstance c = make_planted_instance(30, 0.0, 7, 5);
    CHECK(c.graph.edge_count() == 21);
    CHECK(edge_density(c.graph, Selection{c.planted}) == 1.0);

    // k = 0 disables planting.
    const PlantedInstance d = make_planted_instance(30, 0.2, 0, 5);
    CHECK(d.planted.empty());
    CHECK(d.graph.edges() == erdos_renyi(30, 0.2, 5).edges());
}
