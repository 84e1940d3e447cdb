#include "railcap/sensitivity.hpp"

namespace railcap {

std::vector<double> regime_breakpoints(const MarketScenario& scenario) {
    const auto order = rank_descending(scenario.cap_margins(), scenario.price_tolerance, scenario.tie_rule);
    std::vector<double> out;
    out.reserve(order.size());
    double cumulative = 0.0;
    for (const std::size_t i : order) {
        cumulative += scenario.suppliers[i].production;
        out.push_back(cumulative);
    }
    return out;
}

std::size_t capacity_regime(const MarketScenario& scenario, double capacity) {
    if (!(capacity >= 0.0)) throw DomainError("capacity_regime: capacity must be nonnegative");
    const auto breakpoints = regime_breakpoints(scenario);
    std::size_t k = 0;
    while (k < breakpoints.size() && breakpoints[k] <= capacity) ++k;
    return k + 1;
}

std::string regime_label(std::size_t regime) { return "A" + std::to_string(regime); }

SweepResult sweep(const MarketScenario& scenario, const std::vector<double>& capacities,
                  const SummOptions& options) {
    if (capacities.empty()) throw DomainError("sweep: no capacities given");
    SweepResult out{{}, regime_breakpoints(scenario)};
    out.points.reserve(capacities.size());
    MarketScenario at = scenario;
    for (const double t : capacities) {
        if (!(t >= 0.0)) throw DomainError("sweep: capacities must be nonnegative");
        at.capacity = t;
        out.points.push_back({t, solve_summ(at, options).pi_s, capacity_regime(scenario, t)});
    }
    return out;
}

std::vector<double> linspace(double from, double to, std::size_t steps) {
    if (steps == 0) return {from};
    std::vector<double> out(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k)
        out[k] = k == steps ? to : from + (to - from) * static_cast<double>(k) / static_cast<double>(steps);
    return out;
}

}  // namespace railcap
