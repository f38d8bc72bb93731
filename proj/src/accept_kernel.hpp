#pragma once

#include <cmath>

#include "dks/rng.hpp"

namespace dks::detail {

// Accept with probability min{1, exp(x)}; a uniform draw is consumed only on
// the sub-one branch. Every acceptance rule in the library goes through this
// kernel, which keeps the SA and SAA chains consuming draws in lockstep when
// the theta term vanishes.
inline bool accept_log_ratio(double x, Rng& rng) {
    if (x >= 0.0) return true;
    return rng.next_unit() < std::exp(x);
}

}  // namespace dks::detail
