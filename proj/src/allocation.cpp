#include "railcap/allocation.hpp"

#include <algorithm>
#include <vector>

namespace railcap {

CaseDecision classify_case(double remaining_capacity, const Eigen::VectorXd& production,
                           const Eigen::VectorXd& margins, double tolerance, TieBreaker& ties) {
    const auto n = static_cast<std::size_t>(production.size());
    if (n == 0 || production.sum() <= remaining_capacity) {
        const std::size_t leader =
            n == 0 ? 0 : select_leader(margins, std::vector<bool>(n, true), tolerance, ties);
        return {CaseLabel::C1, leader};
    }

    const std::size_t leader = select_leader(margins, std::vector<bool>(n, true), tolerance, ties);
    const double leader_production = production[static_cast<Eigen::Index>(leader)];
    if (leader_production <= remaining_capacity) {
        const bool all_fit = production.maxCoeff() <= remaining_capacity;
        return {all_fit ? CaseLabel::C2 : CaseLabel::C4, leader};
    }
    const bool none_fit = remaining_capacity <= production.minCoeff();
    return {none_fit ? CaseLabel::C5 : CaseLabel::C3, leader};
}

Allocation allocate(const MarketScenario& scenario, const PriceVector& prices,
                    NegativeMargins negative) {
    const std::size_t n = scenario.size();
    if (static_cast<std::size_t>(prices.prices.size()) != n)
        throw DomainError("allocate: expected " + std::to_string(n) + " prices, got " +
                          std::to_string(prices.prices.size()));
    scenario.validate();
    if ((prices.prices.array() < 0.0).any()) throw DomainError("allocate: negative price");

    const Eigen::VectorXd production = scenario.production();
    const Eigen::VectorXd margins = prices.prices - scenario.transport_costs();

    std::vector<std::size_t> remaining;
    for (std::size_t i = 0; i < n; ++i)
        if (negative == NegativeMargins::ship ||
            margins[static_cast<Eigen::Index>(i)] >= -scenario.price_tolerance)
            remaining.push_back(i);

    Allocation out{Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n)), {}};
    TieBreaker ties(scenario.tie_rule);
    double capacity = scenario.capacity;

    while (capacity > 0.0 && !remaining.empty()) {
        Eigen::VectorXd d(static_cast<Eigen::Index>(remaining.size()));
        Eigen::VectorXd m(static_cast<Eigen::Index>(remaining.size()));
        for (std::size_t k = 0; k < remaining.size(); ++k) {
            d[static_cast<Eigen::Index>(k)] = production[static_cast<Eigen::Index>(remaining[k])];
            m[static_cast<Eigen::Index>(k)] = margins[static_cast<Eigen::Index>(remaining[k])];
        }
        const CaseDecision decision = classify_case(capacity, d, m, scenario.price_tolerance, ties);
        const std::size_t t = remaining[decision.leader];

        const double shipped = std::min(capacity, production[static_cast<Eigen::Index>(t)]);
        out.quantities[static_cast<Eigen::Index>(t)] = shipped;
        capacity -= shipped;
        out.trace.push_back({scenario.suppliers[t].id, decision.label});
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(decision.leader));
    }
    return out;
}

}  // namespace railcap
