#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "railcap/market_model.hpp"
#include "railcap/regulator.hpp"

namespace railcap {

/// Cumulative production of the suppliers in rank order (S + g - c,
/// descending): the capacities at which the allocation changes regime.
std::vector<double> regime_breakpoints(const MarketScenario& scenario);

/// Regime index k in 1..n+1 with B_{k-1} <= T < B_k (B_0 = 0); n+1 once
/// T covers all production.
std::size_t capacity_regime(const MarketScenario& scenario, double capacity);
std::string regime_label(std::size_t regime);

struct SweepPoint {
    double capacity;
    double pi_s;
    std::size_t regime;
};

struct SweepResult {
    std::vector<SweepPoint> points;  // in input order
    std::vector<double> breakpoints;
};

/// Optimal regulator objective at each capacity in `capacities`.
SweepResult sweep(const MarketScenario& scenario, const std::vector<double>& capacities,
                  const SummOptions& options = {});

/// `steps` + 1 evenly spaced capacities from `from` to `to`.
std::vector<double> linspace(double from, double to, std::size_t steps);

}  // namespace railcap
