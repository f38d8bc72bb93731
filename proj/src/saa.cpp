#include "dks/saa.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "accept_kernel.hpp"

namespace dks {

Partition make_partition(std::vector<double> thresholds) {
    if (thresholds.empty()) throw std::invalid_argument("partition needs at least one threshold");
    for (double a : thresholds) {
        if (!(a >= 0.0 && a <= 1.0))
            throw std::invalid_argument("partition thresholds must lie in [0, 1]");
    }
    for (std::size_t i = 1; i < thresholds.size(); ++i) {
        if (!(thresholds[i - 1] < thresholds[i]))
            throw std::invalid_argument("partition thresholds must be strictly increasing");
    }
    return Partition{std::move(thresholds)};
}

Partition default_partition(int n_regions, double a_first, double a_last) {
    if (n_regions < 3) throw std::invalid_argument("need at least three regions");
    if (!(a_first >= 0.0 && a_last <= 1.0 && a_first < a_last))
        throw std::invalid_argument("partition endpoints must satisfy 0 <= a_first < a_last <= 1");
    const int count = n_regions - 1;
    std::vector<double> thresholds(count);
    const double step = (a_last - a_first) / (count - 1);
    for (int i = 0; i < count; ++i) thresholds[i] = a_first + i * step;
    thresholds.back() = a_last;
    return make_partition(std::move(thresholds));
}

int region_index(const Partition& p, double d) {
    if (!(d >= 0.0 && d <= 1.0))
        throw std::invalid_argument("density outside [0, 1]");
    const auto it = std::lower_bound(p.thresholds.begin(), p.thresholds.end(), d);
    return static_cast<int>(it - p.thresholds.begin()) + 1;
}

std::vector<double> desired_distribution(int n_regions) {
    if (n_regions < 1) throw std::invalid_argument("need at least one region");
    std::vector<double> pi(n_regions);
    double sum = 0.0;
    for (int i = 0; i < n_regions; ++i) {
        pi[i] = std::exp(-0.1 * i);
        sum += pi[i];
    }
    for (double& x : pi) x /= sum;
    return pi;
}

double sqrt_temperature(std::uint64_t l, std::uint64_t plateau, double base) {
    if (l == 0) throw std::invalid_argument("iterations are 1-based");
    if (l <= plateau) return base;
    return base * std::sqrt(static_cast<double>(plateau) / static_cast<double>(l));
}

double sqrt_temperature(std::uint64_t l) { return sqrt_temperature(l, 1500, 0.001); }

double gain_factor(std::uint64_t l, std::uint64_t plateau) {
    if (l == 0) throw std::invalid_argument("iterations are 1-based");
    if (l <= plateau) return 1.0;
    return static_cast<double>(plateau) / static_cast<double>(l);
}

double gain_factor(std::uint64_t l) { return gain_factor(l, 1500); }

void apply_theta_update(ThetaVector& theta, int occupied_region,
                        std::span<const double> pi, double eta) {
    if (theta.size() != pi.size())
        throw std::invalid_argument("theta and pi sizes disagree");
    if (occupied_region < 1 || occupied_region > static_cast<int>(theta.size()))
        throw std::invalid_argument("occupied region out of range");
    const std::size_t occ = static_cast<std::size_t>(occupied_region - 1);
    for (std::size_t i = 0; i < theta.size(); ++i) {
        const double e = i == occ ? 1.0 : 0.0;
        theta[i] += eta * (e - pi[i]);
    }
}

ThetaVector theta_update(const ThetaVector& theta, int occupied_region,
                         std::span<const double> pi, double eta) {
    ThetaVector out = theta;
    apply_theta_update(out, occupied_region, pi, eta);
    return out;
}

namespace {

double saa_log_ratio(double d_new, double d_old, double t, const ThetaVector& theta,
                     int j_old, int j_new) {
    if (!(t > 0.0)) throw std::invalid_argument("temperature must be positive");
    const int n = static_cast<int>(theta.size());
    if (j_old < 1 || j_old > n || j_new < 1 || j_new > n)
        throw std::invalid_argument("region index out of range");
    return (d_new - d_old) / t + theta[j_old - 1] - theta[j_new - 1];
}

}  // namespace

double saa_accept_probability(double d_new, double d_old, double t,
                              const ThetaVector& theta, int j_old, int j_new) {
    return std::min(1.0, std::exp(saa_log_ratio(d_new, d_old, t, theta, j_old, j_new)));
}

bool saa_accept(double d_new, double d_old, double t, const ThetaVector& theta,
                int j_old, int j_new, Rng& rng) {
    return detail::accept_log_ratio(saa_log_ratio(d_new, d_old, t, theta, j_old, j_new), rng);
}

SaaConfig default_saa_config(int n_regions) {
    SaaConfig cfg;
    cfg.partition = default_partition(n_regions);
    cfg.pi = desired_distribution(n_regions);
    cfg.theta_init.assign(n_regions, 0.0);
    return cfg;
}

void validate_saa_config(const SaaConfig& cfg) {
    const int n = cfg.partition.regions();
    if (n < 2) throw std::invalid_argument("partition must define at least two regions");
    if (static_cast<int>(cfg.pi.size()) != n)
        throw std::invalid_argument("pi length must equal the region count");
    double sum = 0.0;
    for (double x : cfg.pi) {
        if (!(x > 0.0)) throw std::invalid_argument("pi entries must be positive");
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("pi must sum to 1 within 1e-12");
    if (!cfg.theta_init.empty() && static_cast<int>(cfg.theta_init.size()) != n)
        throw std::invalid_argument("theta_init length must equal the region count");
    if (cfg.plateau < 1) throw std::invalid_argument("plateau must be at least 1");
    if (!(cfg.base_temperature > 0.0))
        throw std::invalid_argument("base temperature must be positive");
}

}  // namespace dks
