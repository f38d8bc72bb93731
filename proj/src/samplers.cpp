#include "dks/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "accept_kernel.hpp"
#include "dks/errors.hpp"
#include "graph_detail.hpp"

namespace dks {

namespace {

constexpr int kInitAttempts = 1000;
constexpr int kGlobalMoveAttempts = 100;

void insert_sorted(std::vector<int>& nodes, int v) {
    nodes.insert(std::lower_bound(nodes.begin(), nodes.end(), v), v);
}

void erase_sorted(std::vector<int>& nodes, int v) {
    nodes.erase(std::lower_bound(nodes.begin(), nodes.end(), v));
}

// Chain-private buffers: one graph scratch plus the id vectors every move
// rewrites. The public move operations wrap these with a fresh instance, so
// both entry points run the identical logic and draw sequence.
struct MoveScratch {
    explicit MoveScratch(int n) : ws(n) {}

    detail::GraphScratch ws;
    std::vector<int> frontier;
    std::vector<int> extended;
    std::vector<int> removable;
    std::vector<int> grown;
    std::vector<int> outside;
    std::vector<int> base;
};

// Connected growth from `start` to size k into ms.grown; false on stall.
bool grow_connected(const Graph& g, int start, int k, Rng& rng, MoveScratch& ms) {
    ms.grown.assign(1, start);
    while (static_cast<int>(ms.grown.size()) < k) {
        detail::neighbors_into(g, ms.grown, ms.ws, ms.frontier);
        if (ms.frontier.empty()) return false;
        insert_sorted(ms.grown, ms.frontier[rng.next_below(ms.frontier.size())]);
    }
    return true;
}

bool init_selection_impl(const Graph& g, int k, Rng& rng, MoveScratch& ms,
                         std::vector<int>& out) {
    const int n = g.node_count();
    for (int attempt = 0; attempt < kInitAttempts; ++attempt) {
        const int start = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        if (grow_connected(g, start, k, rng, ms)) {
            out = ms.grown;
            return true;
        }
    }
    return false;
}

// Assumes the selection is connected (the chain invariant); the public
// local_move wrapper checks that precondition before delegating.
bool local_move_impl(const Graph& g, const std::vector<int>& s, Rng& rng, MoveScratch& ms,
                     std::vector<int>& out) {
    detail::neighbors_into(g, s, ms.ws, ms.frontier);
    if (ms.frontier.empty()) return false;
    const int incoming = ms.frontier[rng.next_below(ms.frontier.size())];

    ms.extended = s;
    insert_sorted(ms.extended, incoming);
    detail::non_articulation_into(g, ms.extended, ms.ws, ms.removable);
    // Only members of s may leave; the incoming node never qualifies.
    std::erase_if(ms.removable, [&](int v) { return v == incoming; });
    if (ms.removable.empty()) return false;
    const int outgoing = ms.removable[rng.next_below(ms.removable.size())];

    out = ms.extended;
    erase_sorted(out, outgoing);
    return true;
}

void outside_nodes_into(int n, const std::vector<int>& s, std::vector<int>& out) {
    out.clear();
    auto it = s.begin();
    for (int v = 0; v < n; ++v) {
        if (it != s.end() && *it == v) {
            ++it;
            continue;
        }
        out.push_back(v);
    }
}

bool global_move_impl(const Graph& g, const std::vector<int>& s, int k, Rng& rng,
                      MoveScratch& ms, std::vector<int>& out) {
    const int n = g.node_count();
    if (k >= n)
        throw std::invalid_argument("global move needs a node outside the selection (k < n)");
    outside_nodes_into(n, s, ms.outside);
    for (int attempt = 0; attempt < kGlobalMoveAttempts; ++attempt) {
        const int start = ms.outside[rng.next_below(ms.outside.size())];
        if (grow_connected(g, start, k, rng, ms)) {
            out = ms.grown;
            return true;
        }
    }
    return false;
}

void sm_swap_impl(const Graph& g, const std::vector<int>& s, Rng& rng, MoveScratch& ms,
                  std::vector<int>& out) {
    const int outgoing = s[rng.next_below(s.size())];
    ms.base = s;
    erase_sorted(ms.base, outgoing);

    if (!ms.base.empty()) {
        detail::neighbors_into(g, ms.base, ms.ws, ms.frontier);
        // A swap must change the set, so nodes already selected are excluded;
        // only the outgoing node can still appear here.
        std::erase_if(ms.frontier, [&](int v) { return v == outgoing; });
    } else {
        ms.frontier.clear();
    }
    if (ms.frontier.empty()) {
        // Documented fallback: no neighbor is available, draw from V \ s.
        outside_nodes_into(g.node_count(), s, ms.frontier);
        if (ms.frontier.empty()) {
            out = s;  // selection already covers V
            return;
        }
    }
    const int incoming = ms.frontier[rng.next_below(ms.frontier.size())];
    out = ms.base;
    insert_sorted(out, incoming);
}

// False when no detached replacement exists (out left untouched).
bool sm_ninth_impl(const Graph& g, const std::vector<int>& s, Rng& rng, MoveScratch& ms,
                   std::vector<int>& out) {
    const int n = g.node_count();
    const std::uint64_t stamp = ms.ws.bump();
    for (int v : s) ms.ws.member_stamp[v] = stamp;
    ms.frontier.clear();  // nodes with no edge into s at all
    for (int v = 0; v < n; ++v) {
        if (ms.ws.member_stamp[v] == stamp) continue;
        bool touches = false;
        for (int w : g.neighbors(v)) {
            if (ms.ws.member_stamp[w] == stamp) {
                touches = true;
                break;
            }
        }
        if (!touches) ms.frontier.push_back(v);
    }
    if (ms.frontier.empty()) return false;
    const int outgoing = s[rng.next_below(s.size())];
    const int incoming = ms.frontier[rng.next_below(ms.frontier.size())];
    out = s;
    erase_sorted(out, outgoing);
    insert_sorted(out, incoming);
    return true;
}

long long count_internal_edges(const Graph& g, const std::vector<int>& nodes) {
    long long twice = 0;
    for (int u : nodes) {
        const auto nb = g.neighbors(u);
        auto it = nodes.begin();
        for (int w : nb) {
            while (it != nodes.end() && *it < w) ++it;
            if (it == nodes.end()) break;
            if (*it == w) twice++;
        }
    }
    return twice / 2;
}

}  // namespace

const char* to_string(Algorithm a) {
    switch (a) {
        case Algorithm::Sm: return "sm";
        case Algorithm::Sa: return "sa";
        case Algorithm::Saa: return "saa";
    }
    return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
    if (name == "sm") return Algorithm::Sm;
    if (name == "sa") return Algorithm::Sa;
    if (name == "saa") return Algorithm::Saa;
    return std::nullopt;
}

Selection init_selection(const Graph& g, int k, Rng& rng) {
    const int n = g.node_count();
    if (k < 1 || k > n) throw std::invalid_argument("selection size must lie in [1, n]");
    MoveScratch ms(n);
    std::vector<int> out;
    if (!init_selection_impl(g, k, rng, ms, out))
        throw InstanceInfeasible(
            "no connected subgraph of the requested size was found after 1000 growth attempts");
    return Selection{std::move(out)};
}

std::optional<Selection> local_move(const Graph& g, const Selection& s, Rng& rng) {
    if (!is_connected(g, s.nodes))
        throw std::invalid_argument("local move requires a connected selection");
    MoveScratch ms(g.node_count());
    std::vector<int> out;
    if (!local_move_impl(g, s.nodes, rng, ms, out)) return std::nullopt;
    return Selection{std::move(out)};
}

std::optional<Selection> global_move(const Graph& g, const Selection& s, int k, Rng& rng) {
    MoveScratch ms(g.node_count());
    std::vector<int> out;
    if (!global_move_impl(g, s.nodes, k, rng, ms, out)) return std::nullopt;
    return Selection{std::move(out)};
}

Selection sm_swap_move(const Graph& g, const Selection& s, Rng& rng) {
    MoveScratch ms(g.node_count());
    std::vector<int> out;
    sm_swap_impl(g, s.nodes, rng, ms, out);
    return Selection{std::move(out)};
}

Selection sm_ninth_step(const Graph& g, const Selection& s, Rng& rng) {
    MoveScratch ms(g.node_count());
    std::vector<int> out;
    if (!sm_ninth_impl(g, s.nodes, rng, ms, out)) return s;
    return Selection{std::move(out)};
}

double sm_accept_probability(long long l_new, long long l_old, int k) {
    if (l_new <= l_old) return 1.0;
    return std::exp(-static_cast<double>(l_new - l_old) / static_cast<double>(k));
}

bool sm_accept(long long l_new, long long l_old, int k, Rng& rng) {
    return detail::accept_log_ratio(
        -static_cast<double>(l_new - l_old) / static_cast<double>(k), rng);
}

double metropolis_accept_probability(double d_new, double d_old, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("temperature must be positive");
    return std::min(1.0, std::exp((d_new - d_old) / t));
}

bool metropolis_accept_density(double d_new, double d_old, double t, Rng& rng) {
    if (!(t > 0.0)) throw std::invalid_argument("temperature must be positive");
    return detail::accept_log_ratio((d_new - d_old) / t, rng);
}

double geometric_temperature(std::uint64_t l) {
    return std::pow(0.001, static_cast<double>(l) / 1000.0);
}

ChainResult run_chain(const Graph& g, const SamplerConfig& cfg,
                      const std::optional<SaaConfig>& saa_cfg) {
    const int n = g.node_count();
    const int k = cfg.k;
    if (k < 2 || k > n) throw std::invalid_argument("k must lie in [2, n]");
    if (cfg.max_iterations < 1) throw std::invalid_argument("need at least one iteration");
    if (!(cfg.alpha >= 0.0 && cfg.alpha <= 1.0))
        throw std::invalid_argument("alpha must lie in [0, 1]");
    if (cfg.algorithm != Algorithm::Sm && k >= n)
        throw std::invalid_argument("SA/SAA need k < n for the global move");

    const bool is_saa = cfg.algorithm == Algorithm::Saa;
    const SaaConfig* saa = nullptr;
    if (is_saa) {
        if (!saa_cfg) throw std::invalid_argument("SAA requires an SAA configuration");
        validate_saa_config(*saa_cfg);
        saa = &*saa_cfg;
    }

    Rng rng(cfg.seed);
    MoveScratch ms(n);
    std::vector<int> cur;
    if (!init_selection_impl(g, k, rng, ms, cur))
        throw InstanceInfeasible(
            "no connected subgraph of the requested size was found after 1000 growth attempts");
    long long cur_edges = count_internal_edges(g, cur);
    double cur_density = density_from_edges(cur_edges, k);

    std::vector<int> best = cur;
    long long best_edges = cur_edges;
    double best_density = cur_density;

    // SM objective cache; distances in the full graph, penalty n.
    long long cur_len = 0;
    if (cfg.algorithm == Algorithm::Sm) cur_len = detail::distance_sum(g, cur, n, ms.ws);

    ThetaVector theta;
    int cur_region = 0;
    if (is_saa) {
        theta = saa->theta_init.empty()
                    ? ThetaVector(saa->partition.regions(), 0.0)
                    : saa->theta_init;
        cur_region = region_index(saa->partition, cur_density);
    }

    Trace trace;
    trace.records.reserve(cfg.max_iterations);

    std::vector<int> proposal;
    Selection observed;  // reused view for the observer hook
    std::uint64_t iterations_done = 0;
    for (std::uint64_t l = 1; l <= cfg.max_iterations; ++l) {
        double temperature = 0.0;
        bool accepted = false;

        if (cfg.algorithm == Algorithm::Sm) {
            sm_swap_impl(g, cur, rng, ms, proposal);
            const long long proposal_len = detail::distance_sum(g, proposal, n, ms.ws);
            if (sm_accept(proposal_len, cur_len, k, rng)) {
                cur.swap(proposal);
                cur_len = proposal_len;
                cur_edges = count_internal_edges(g, cur);
                cur_density = density_from_edges(cur_edges, k);
                accepted = true;
            }
            if (l % 9 == 0 && sm_ninth_impl(g, cur, rng, ms, proposal)) {
                cur.swap(proposal);
                cur_len = detail::distance_sum(g, cur, n, ms.ws);
                cur_edges = count_internal_edges(g, cur);
                cur_density = density_from_edges(cur_edges, k);
            }
        } else {
            if (cfg.temperature_override) {
                temperature = cfg.temperature_override(l);
            } else if (cfg.algorithm == Algorithm::Sa) {
                temperature = geometric_temperature(l);
            } else {
                temperature = sqrt_temperature(l, saa->plateau, saa->base_temperature);
            }
            // The geometric schedule underflows to zero near l ~ 10^5; clamp
            // so the acceptance rule stays defined (it still rejects every
            // density decrease at this scale).
            temperature = std::max(temperature, std::numeric_limits<double>::min());

            const bool proposed = rng.next_unit() < cfg.alpha
                                      ? local_move_impl(g, cur, rng, ms, proposal)
                                      : global_move_impl(g, cur, k, rng, ms, proposal);
            if (proposed) {
                const long long proposal_edges = count_internal_edges(g, proposal);
                const double proposal_density = density_from_edges(proposal_edges, k);
                bool take;
                int proposal_region = 0;
                if (is_saa) {
                    proposal_region = region_index(saa->partition, proposal_density);
                    take = saa_accept(proposal_density, cur_density, temperature, theta,
                                      cur_region, proposal_region, rng);
                } else {
                    take = metropolis_accept_density(proposal_density, cur_density,
                                                     temperature, rng);
                }
                if (take) {
                    cur.swap(proposal);
                    cur_edges = proposal_edges;
                    cur_density = proposal_density;
                    cur_region = proposal_region;
                    accepted = true;
                }
            }
            if (is_saa) {
                const double eta = saa->gain_override ? *saa->gain_override
                                                      : gain_factor(l, saa->plateau);
                apply_theta_update(theta, cur_region, saa->pi, eta);
            }
        }

        // Strict improvement by integer edge count keeps the earliest best.
        if (cur_edges > best_edges) {
            best = cur;
            best_edges = cur_edges;
            best_density = cur_density;
        }

        trace.records.push_back({l, cur_density, best_density, temperature, accepted,
                                 is_saa ? cur_region : 0});
        if (cfg.state_observer) {
            observed.nodes = cur;
            cfg.state_observer(l, observed);
        }
        iterations_done = l;
        if (cfg.stop_at_target && cfg.target_density &&
            best_density >= *cfg.target_density - 1e-12)
            break;
    }

    ChainState state;
    state.current = Selection{std::move(cur)};
    state.current_edges = cur_edges;
    state.current_density = cur_density;
    state.best = Selection{std::move(best)};
    state.best_edges = best_edges;
    state.best_density = best_density;
    state.iteration = iterations_done;
    state.rng = rng;
    return {std::move(trace), std::move(state)};
}

}  // namespace dks
