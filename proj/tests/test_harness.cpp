#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "dks/errors.hpp"
#include "dks/generators.hpp"
#include "dks/harness.hpp"

using namespace dks;

namespace {

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Trace synthetic_trace(const std::vector<double>& best) {
    Trace t;
    for (std::size_t i = 0; i < best.size(); ++i)
        t.records.push_back({i + 1, best[i], best[i], 0.0, true, 0});
    return t;
}

}  // namespace

TEST_CASE("brute force on the five-node path") {
    const OracleResult r = brute_force_densest(path_graph(5), 3);
    CHECK(r.max_density == doctest::Approx(2.0 / 3).epsilon(1e-15));
    CHECK(r.max_edges == 2);
    CHECK(r.witness.nodes == std::vector<int>{0, 1, 2});
}

TEST_CASE("brute force on an empty graph") {
    const Graph empty(8, {});
    const OracleResult r = brute_force_densest(empty, 4);
    CHECK(r.max_density == 0.0);
    CHECK(r.witness.nodes == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("brute force recovers a planted clique") {
    const PlantedInstance inst = make_planted_instance(30, 0.05, 5, 14);
    const OracleResult r = brute_force_densest(inst.graph, 5);
    CHECK(r.max_density == 1.0);
    CHECK(r.witness.nodes == inst.planted);
}

TEST_CASE("brute force refuses above the enumeration cap") {
    const PlantedInstance inst = make_planted_instance(100, 0.05, 10, 3);
    try {
        brute_force_densest(inst.graph, 10);
        FAIL("expected EnumerationCapExceeded");
    } catch (const EnumerationCapExceeded& e) {
        CHECK(e.subsets() == UINT64_C(17310309456440));  // C(100, 10)
        CHECK(e.cap() == UINT64_C(10000000));
        CHECK(std::string(e.what()).find("17310309456440") != std::string::npos);
    }
    CHECK_THROWS_AS(brute_force_densest(inst.graph, 1), std::invalid_argument);
}

TEST_CASE("first_hit_iteration scans best densities") {
    Trace t = synthetic_trace({0.3, 0.5, 0.8});
    t.records[2].best_density = 1.0;
    t.records[2].iteration = 2954;
    CHECK(first_hit_iteration(t, 1.0) == 2954);
    CHECK(first_hit_iteration(t, 0.4) == 2);
    CHECK(first_hit_iteration(t, 0.0) == 1);
    CHECK(!first_hit_iteration(synthetic_trace({0.3, 0.8}), 1.0).has_value());
    CHECK(!first_hit_iteration(Trace{}, 0.0).has_value());
}

TEST_CASE("replication study on a complete graph succeeds immediately") {
    StudyConfig cfg;
    cfg.replicates = 2;
    cfg.n = 12;
    cfg.p = 1.0;
    cfg.k = 10;
    cfg.max_iterations = 50;
    cfg.master_seed = 5;
    const StudySummary s = run_replication_study(cfg);
    REQUIRE(s.rows.size() == 6);
    for (const ReplicateRow& row : s.rows) {
        CHECK(row.error.empty());
        CHECK(row.success);
        CHECK(row.first_hit == 1);
        CHECK(row.best_density == 1.0);
    }
    for (const auto& [algo, agg] : s.aggregates) {
        CHECK(agg.success_count == 2);
        CHECK(agg.median_first_hit == 1.0);
        CHECK(agg.mean_wall_seconds > 0.0);
    }
}

TEST_CASE("replication study is deterministic apart from wall times") {
    StudyConfig cfg;
    cfg.replicates = 4;
    cfg.n = 40;
    cfg.p = 0.1;
    cfg.k = 5;
    cfg.max_iterations = 800;
    cfg.master_seed = 99;
    cfg.jobs = 1;
    const StudySummary a = run_replication_study(cfg);
    cfg.jobs = 3;  // content must be independent of scheduling
    const StudySummary b = run_replication_study(cfg);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].replicate == b.rows[i].replicate);
        CHECK(a.rows[i].algorithm == b.rows[i].algorithm);
        CHECK(a.rows[i].success == b.rows[i].success);
        CHECK(a.rows[i].first_hit == b.rows[i].first_hit);
        CHECK(a.rows[i].best_density == b.rows[i].best_density);
    }
}

TEST_CASE("success counts equal the number of recorded first hits") {
    StudyConfig cfg;
    cfg.replicates = 6;
    cfg.n = 40;
    cfg.p = 0.1;
    cfg.k = 5;
    cfg.max_iterations = 500;
    cfg.master_seed = 31;
    const StudySummary s = run_replication_study(cfg);
    for (const auto& [algo, agg] : s.aggregates) {
        int hits = 0;
        int successes = 0;
        for (const ReplicateRow& row : s.rows) {
            if (row.algorithm != algo) continue;
            if (row.first_hit) ++hits;
            if (row.success) ++successes;
        }
        CHECK(agg.success_count == successes);
        CHECK(hits == successes);
    }
}

TEST_CASE("instances that cannot be built become failure rows, not crashes") {
    // Study instances always contain their planted clique, so the failure
    // path is instance construction itself (here k > n).
    StudyConfig cfg;
    cfg.replicates = 2;
    cfg.n = 8;
    cfg.p = 0.1;
    cfg.k = 9;
    cfg.max_iterations = 10;
    const StudySummary s = run_replication_study(cfg);
    REQUIRE(s.rows.size() == 6);
    for (const ReplicateRow& row : s.rows) {
        CHECK(!row.error.empty());
        CHECK(!row.success);
        CHECK(!row.first_hit.has_value());
    }
    for (const auto& [algo, agg] : s.aggregates) {
        CHECK(agg.success_count == 0);
        CHECK(!agg.median_first_hit.has_value());
    }

    // A p = 0 instance is exactly one planted K5; every chain still runs.
    StudyConfig sparse;
    sparse.replicates = 2;
    sparse.n = 20;
    sparse.p = 0.0;
    sparse.k = 5;
    sparse.max_iterations = 10;
    for (const ReplicateRow& row : run_replication_study(sparse).rows) {
        CHECK(row.error.empty());
        CHECK(row.success);
    }
}

TEST_CASE("SA and SAA match the brute-force oracle on small instances") {
    // Reduced-size preview of the acceptance check: 5 instances, both
    // algorithms, 5000 iterations each.
    int matches_sa = 0, matches_saa = 0;
    for (int i = 1; i <= 5; ++i) {
        const Graph g = erdos_renyi(20, 0.2, 700 + i);
        const OracleResult oracle = brute_force_densest(g, 4);
        for (const Algorithm algo : {Algorithm::Sa, Algorithm::Saa}) {
            SamplerConfig cfg;
            cfg.algorithm = algo;
            cfg.k = 4;
            cfg.max_iterations = 5000;
            cfg.seed = 800 + i;
            const ChainResult res = run_chain(g, cfg, default_saa_config());
            if (res.state.best_edges == oracle.max_edges)
                (algo == Algorithm::Sa ? matches_sa : matches_saa)++;
        }
    }
    CHECK(matches_sa >= 4);
    CHECK(matches_saa >= 4);
}

TEST_CASE("stopping when found preserves every metric except wall time") {
    StudyConfig cfg;
    cfg.replicates = 3;
    cfg.n = 50;
    cfg.p = 0.08;
    cfg.k = 6;
    cfg.max_iterations = 4000;
    cfg.master_seed = 12;
    const StudySummary full = run_replication_study(cfg);
    cfg.stop_when_found = true;
    const StudySummary stopped = run_replication_study(cfg);
    REQUIRE(full.rows.size() == stopped.rows.size());
    for (std::size_t i = 0; i < full.rows.size(); ++i) {
        CHECK(full.rows[i].success == stopped.rows[i].success);
        CHECK(full.rows[i].first_hit == stopped.rows[i].first_hit);
        if (stopped.rows[i].success) CHECK(stopped.rows[i].best_density == 1.0);
    }
}
