#pragma once

#include <cstddef>

#include <Eigen/Core>

#include "railcap/market_model.hpp"

namespace railcap {

/// Treatment of suppliers whose offered price is below the carrier's cost.
enum class NegativeMargins {
    skip,  // never shipped; keeps the allocation optimal for the carrier
    ship,  // shipped in rank order while capacity remains, as the grouper does
};

struct CaseDecision {
    CaseLabel label;
    std::size_t leader;  // index into the arrays passed to classify_case
};

/// Case of the carrier's table that holds for the remaining capacity and
/// the remaining suppliers, together with the top-margin supplier i*.
/// Leader is production.size() when no supplier remains.
CaseDecision classify_case(double remaining_capacity, const Eigen::VectorXd& production,
                           const Eigen::VectorXd& margins, double tolerance, TieBreaker& ties);

/// Greedy bounded continuous knapsack over margins p_i - c_i: suppliers
/// are served in descending margin order, each receiving
/// min(remaining capacity, D_i).
Allocation allocate(const MarketScenario& scenario, const PriceVector& prices,
                    NegativeMargins negative = NegativeMargins::skip);

}  // namespace railcap
