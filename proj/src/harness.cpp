#include "dks/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <string>
#include <thread>

#include "dks/errors.hpp"

namespace dks {

namespace {

// C(n, k), saturated at 2^63-1 to keep the cap comparison safe.
std::uint64_t binomial_saturated(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    constexpr std::uint64_t kMax = UINT64_C(0x7fffffffffffffff);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        // result * (n - k + i) / i stays integral at every step.
        const std::uint64_t factor = static_cast<std::uint64_t>(n - k + i);
        if (result > kMax / factor) return kMax;
        result = result * factor / static_cast<std::uint64_t>(i);
    }
    return result;
}

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t m = values.size();
    if (m % 2 == 1) return values[m / 2];
    return 0.5 * (values[m / 2 - 1] + values[m / 2]);
}

}  // namespace

OracleResult brute_force_densest(const Graph& g, int k, std::uint64_t cap) {
    const int n = g.node_count();
    if (k < 2 || k > n) throw std::invalid_argument("k must lie in [2, n]");
    const std::uint64_t subsets = binomial_saturated(n, k);
    if (subsets > cap) {
        throw EnumerationCapExceeded(
            subsets, cap,
            "C(" + std::to_string(n) + ", " + std::to_string(k) + ") = " +
                std::to_string(subsets) + " subsets exceeds the enumeration cap of " +
                std::to_string(cap));
    }

    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    long long best_edges = -1;
    std::vector<int> best_pick;
    for (;;) {
        long long edges = 0;
        for (int a = 0; a < k; ++a) {
            for (int b = a + 1; b < k; ++b) {
                if (g.has_edge(pick[a], pick[b])) ++edges;
            }
        }
        // Lexicographic enumeration plus strict improvement keeps the
        // lexicographically smallest witness.
        if (edges > best_edges) {
            best_edges = edges;
            best_pick = pick;
        }
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }

    OracleResult out;
    out.max_edges = best_edges;
    out.max_density = density_from_edges(best_edges, k);
    out.witness = Selection{std::move(best_pick)};
    return out;
}

std::optional<std::uint64_t> first_hit_iteration(const Trace& trace, double target) {
    for (const TraceRecord& r : trace.records) {
        if (r.best_density >= target - 1e-12) return r.iteration;
    }
    return std::nullopt;
}

std::uint64_t algorithm_seed_offset(Algorithm a) {
    switch (a) {
        case Algorithm::Sm: return UINT64_C(1'000'000'000);
        case Algorithm::Sa: return UINT64_C(2'000'000'000);
        case Algorithm::Saa: return UINT64_C(3'000'000'000);
    }
    return 0;
}

StudySummary run_replication_study(const StudyConfig& cfg) {
    if (cfg.replicates < 1) throw std::invalid_argument("need at least one replicate");
    if (cfg.algorithms.empty()) throw std::invalid_argument("need at least one algorithm");
    if (cfg.k < 2) throw std::invalid_argument("k must be at least 2");
    validate_saa_config(cfg.saa);

    const std::size_t algos = cfg.algorithms.size();
    StudySummary summary;
    summary.config = cfg;
    summary.rows.resize(static_cast<std::size_t>(cfg.replicates) * algos);

    const long long clique_edges =
        static_cast<long long>(cfg.k) * (cfg.k - 1) / 2;

    auto run_replicate = [&](int index) {
        const int replicate = index + 1;
        ReplicateRow* rows = summary.rows.data() + static_cast<std::size_t>(index) * algos;
        const std::uint64_t instance_seed = cfg.master_seed + static_cast<std::uint64_t>(replicate);
        Graph graph;
        std::string instance_error;
        try {
            graph = make_planted_instance(cfg.n, cfg.p, cfg.k, instance_seed).graph;
        } catch (const std::exception& e) {
            instance_error = e.what();
        }
        for (std::size_t a = 0; a < algos; ++a) {
            const Algorithm algo = cfg.algorithms[a];
            ReplicateRow& row = rows[a];
            row.replicate = replicate;
            row.algorithm = algo;
            if (!instance_error.empty()) {
                row.error = instance_error;
                continue;
            }
            SamplerConfig sc;
            sc.algorithm = algo;
            sc.k = cfg.k;
            sc.max_iterations = cfg.max_iterations;
            sc.alpha = cfg.alpha;
            sc.seed = cfg.master_seed + static_cast<std::uint64_t>(replicate) +
                      algorithm_seed_offset(algo);
            sc.target_density = 1.0;
            sc.stop_at_target = cfg.stop_when_found;
            try {
                const auto start = std::chrono::steady_clock::now();
                ChainResult result = run_chain(
                    graph, sc,
                    algo == Algorithm::Saa ? std::optional<SaaConfig>(cfg.saa) : std::nullopt);
                const auto stop = std::chrono::steady_clock::now();
                row.wall_seconds = std::chrono::duration<double>(stop - start).count();
                row.best_density = result.state.best_density;
                row.success = result.state.best_edges == clique_edges;
                if (row.success) row.first_hit = first_hit_iteration(result.trace, 1.0);
            } catch (const std::exception& e) {
                row.error = e.what();
            }
        }
    };

    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        for (int i = 0; i < cfg.replicates; ++i) run_replicate(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> workers;
        const int worker_count = std::min(jobs, cfg.replicates);
        workers.reserve(worker_count);
        for (int w = 0; w < worker_count; ++w) {
            workers.emplace_back([&] {
                for (;;) {
                    const int i = next.fetch_add(1);
                    if (i >= cfg.replicates) return;
                    run_replicate(i);
                }
            });
        }
        for (auto& t : workers) t.join();
    }

    for (const Algorithm algo : cfg.algorithms) {
        AlgorithmAggregate agg;
        std::vector<double> hits;
        std::vector<double> walls;
        for (const ReplicateRow& row : summary.rows) {
            if (row.algorithm != algo) continue;
            if (row.success) ++agg.success_count;
            if (row.first_hit) hits.push_back(static_cast<double>(*row.first_hit));
            if (row.error.empty()) walls.push_back(row.wall_seconds);
        }
        if (!hits.empty()) agg.median_first_hit = median(std::move(hits));
        if (!walls.empty()) {
            double sum = 0.0;
            for (double w : walls) sum += w;
            agg.mean_wall_seconds = sum / static_cast<double>(walls.size());
        }
        summary.aggregates.emplace_back(algo, agg);
    }
    return summary;
}

}  // namespace dks
