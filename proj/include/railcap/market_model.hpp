#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "railcap/errors.hpp"
#include "railcap/tie_rule.hpp"

namespace railcap {

/// One product and its (single) producer. Quantities are in a common
/// volume unit, money fields in a common currency per unit of volume.
struct SupplierSpec {
    std::string id;
    double production = 0.0;      // units available to ship
    double market_price = 0.0;    // sale price at destination, per unit
    double transport_cost = 0.0;  // carrier's cost, per unit
    double inventory_cost = 0.0;  // storage cost of an unshipped unit for the period
    double social_weight = 0.0;   // regulator's value of one delivered unit
    std::optional<double> mre;    // revenue entitlement cap; absent = non-restrictive

    /// Margin the carrier earns when this supplier offers its price cap.
    double cap_margin() const { return market_price + inventory_cost - transport_cost; }

    /// Per-unit contribution of a shipped unit to social utility.
    double social_coefficient() const { return cap_margin() + social_weight; }

    friend bool operator==(const SupplierSpec&, const SupplierSpec&) = default;
};

struct MarketScenario {
    std::vector<SupplierSpec> suppliers;
    double capacity = 0.0;
    std::optional<double> quota_cap_fraction;
    double price_tolerance = 1e-9;
    TieRule tie_rule;

    std::size_t size() const { return suppliers.size(); }

    /// Index of `id`, or size() when absent.
    std::size_t find(std::string_view id) const;

    Eigen::VectorXd production() const;
    Eigen::VectorXd market_prices() const;
    Eigen::VectorXd transport_costs() const;
    Eigen::VectorXd inventory_costs() const;
    Eigen::VectorXd social_weights() const;
    Eigen::VectorXd cap_margins() const;
    Eigen::VectorXd social_coefficients() const;

    /// Throws DomainError on negative fields, duplicate ids or a cap
    /// fraction outside [0, 1].
    void validate() const;

    friend bool operator==(const MarketScenario&, const MarketScenario&) = default;
};

struct PriceVector {
    Eigen::VectorXd prices;

    static PriceVector price_caps(const MarketScenario& scenario);
};

struct QuotaVector {
    Eigen::VectorXd quotas;

    static QuotaVector zeros(std::size_t n) { return {Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n))}; }
    double total() const { return quotas.sum(); }
};

/// Throws DomainError unless 0 <= L_i <= D_i and sum(L) <= T.
void validate_quotas(const MarketScenario& scenario, const QuotaVector& quotas);

/// Rows of the carrier's case table.
enum class CaseLabel { C1 = 1, C2, C3, C4, C5 };
std::string_view to_string(CaseLabel label);

struct TraceStep {
    std::string supplier_id;
    CaseLabel label;
};

struct Allocation {
    Eigen::VectorXd quantities;
    std::vector<TraceStep> trace;
};

/// Supplier's period profit when `shipped` of its production moves at
/// `price`: shipped*(S - p) - g*(D - shipped).
double supplier_profit(const SupplierSpec& spec, double price, double shipped);

/// Carrier's profit sum_i u_i (p_i - c_i).
template <typename QuantityDerived, typename PriceDerived, typename CostDerived>
typename QuantityDerived::Scalar transporter_profit(const Eigen::MatrixBase<QuantityDerived>& shipped,
                                                    const Eigen::MatrixBase<PriceDerived>& prices,
                                                    const Eigen::MatrixBase<CostDerived>& costs) {
    if (shipped.size() != prices.size() || prices.size() != costs.size())
        throw DomainError("transporter_profit: dimension mismatch");
    return shipped.dot(prices - costs);
}

double transporter_profit(const MarketScenario& scenario, const PriceVector& prices,
                          const Allocation& allocation);

}  // namespace railcap
