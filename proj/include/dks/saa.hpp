#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dks/rng.hpp"

namespace dks {

// Partition of the density range into N bands: band 1 is d <= a_1, band i
// is a_{i-1} < d <= a_i, band N is d > a_{N-1}.
struct Partition {
    std::vector<double> thresholds;  // a_1 < ... < a_{N-1}, inside [0, 1]

    int regions() const { return static_cast<int>(thresholds.size()) + 1; }
};

// Validates: non-empty, strictly increasing, values in [0, 1].
Partition make_partition(std::vector<double> thresholds);

// n_regions - 1 evenly spaced thresholds from a_first to a_last. The default
// endpoints make band 1 unreachable for connected selections (their density
// is at least 2/k) and band N clique-only.
Partition default_partition(int n_regions, double a_first = 0.15, double a_last = 0.99);

// 1-based band index of a density. Throws for d outside [0, 1].
int region_index(const Partition& p, double d);

// pi_i proportional to exp(-0.1 (i-1)), normalized to sum 1.
std::vector<double> desired_distribution(int n_regions);

// base * sqrt(plateau / max(l, plateau)): flat for the first `plateau`
// iterations, then decays like 1/sqrt(l).
double sqrt_temperature(std::uint64_t l, std::uint64_t plateau, double base);
double sqrt_temperature(std::uint64_t l);  // plateau 1500, base 0.001

// plateau / max(plateau, l): 1 through the plateau, then decays like 1/l.
double gain_factor(std::uint64_t l, std::uint64_t plateau);
double gain_factor(std::uint64_t l);  // plateau 1500

// Adaptive log-weights, one per band. Only differences enter acceptance, so
// no normalization is ever applied.
using ThetaVector = std::vector<double>;

// theta + eta * (e - pi) where e is the unit indicator of occupied_region
// (1-based). Throws if the region is out of range or sizes disagree.
ThetaVector theta_update(const ThetaVector& theta, int occupied_region,
                         std::span<const double> pi, double eta);

// Same update applied in place; the chain's inner loop uses this.
void apply_theta_update(ThetaVector& theta, int occupied_region,
                        std::span<const double> pi, double eta);

double saa_accept_probability(double d_new, double d_old, double t,
                              const ThetaVector& theta, int j_old, int j_new);

// Accepts with probability min{1, exp((d_new - d_old)/t + theta[j_old] -
// theta[j_new])}. Consumes a draw only when that probability is below one.
bool saa_accept(double d_new, double d_old, double t, const ThetaVector& theta,
                int j_old, int j_new, Rng& rng);

struct SaaConfig {
    Partition partition;           // default_partition(51)
    std::vector<double> pi;        // desired_distribution(51)
    std::uint64_t plateau = 1500;  // shared by temperature and gain schedules
    double base_temperature = 0.001;
    ThetaVector theta_init;        // empty means all zeros

    // Test hook: fixes eta for every iteration (0 freezes theta entirely).
    std::optional<double> gain_override;
};

SaaConfig default_saa_config(int n_regions = 51);

// Throws std::invalid_argument when sizes disagree, pi is not a positive
// distribution summing to 1 within 1e-12, or plateau/base are degenerate.
void validate_saa_config(const SaaConfig& cfg);

}  // namespace dks
