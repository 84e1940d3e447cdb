#include "railcap/market_model.hpp"

#include <cmath>
#include <unordered_set>

namespace railcap {

namespace {

template <typename Field>
Eigen::VectorXd column(const MarketScenario& scenario, Field field) {
    Eigen::VectorXd out(static_cast<Eigen::Index>(scenario.size()));
    for (std::size_t i = 0; i < scenario.size(); ++i)
        out[static_cast<Eigen::Index>(i)] = field(scenario.suppliers[i]);
    return out;
}

void require_nonnegative(double value, const std::string& what) {
    if (!(value >= 0.0) || !std::isfinite(value))
        throw DomainError(what + " must be a finite nonnegative number");
}

}  // namespace

std::size_t MarketScenario::find(std::string_view id) const {
    for (std::size_t i = 0; i < suppliers.size(); ++i)
        if (suppliers[i].id == id) return i;
    return suppliers.size();
}

Eigen::VectorXd MarketScenario::production() const {
    return column(*this, [](const SupplierSpec& s) { return s.production; });
}
Eigen::VectorXd MarketScenario::market_prices() const {
    return column(*this, [](const SupplierSpec& s) { return s.market_price; });
}
Eigen::VectorXd MarketScenario::transport_costs() const {
    return column(*this, [](const SupplierSpec& s) { return s.transport_cost; });
}
Eigen::VectorXd MarketScenario::inventory_costs() const {
    return column(*this, [](const SupplierSpec& s) { return s.inventory_cost; });
}
Eigen::VectorXd MarketScenario::social_weights() const {
    return column(*this, [](const SupplierSpec& s) { return s.social_weight; });
}
Eigen::VectorXd MarketScenario::cap_margins() const {
    return column(*this, [](const SupplierSpec& s) { return s.cap_margin(); });
}
Eigen::VectorXd MarketScenario::social_coefficients() const {
    return column(*this, [](const SupplierSpec& s) { return s.social_coefficient(); });
}

void MarketScenario::validate() const {
    require_nonnegative(capacity, "capacity");
    require_nonnegative(price_tolerance, "price tolerance");
    if (quota_cap_fraction && !(*quota_cap_fraction >= 0.0 && *quota_cap_fraction <= 1.0))
        throw DomainError("quota cap fraction must lie in [0, 1]");
    std::unordered_set<std::string> seen;
    for (const auto& s : suppliers) {
        if (!seen.insert(s.id).second) throw DomainError("duplicate supplier id '" + s.id + "'");
        require_nonnegative(s.production, s.id + ": production");
        require_nonnegative(s.market_price, s.id + ": market price");
        require_nonnegative(s.transport_cost, s.id + ": transport cost");
        require_nonnegative(s.inventory_cost, s.id + ": inventory cost");
        require_nonnegative(s.social_weight, s.id + ": social weight");
        if (s.mre) require_nonnegative(*s.mre, s.id + ": MRE");
    }
}

PriceVector PriceVector::price_caps(const MarketScenario& scenario) {
    return {scenario.market_prices() + scenario.inventory_costs()};
}

void validate_quotas(const MarketScenario& scenario, const QuotaVector& quotas) {
    if (static_cast<std::size_t>(quotas.quotas.size()) != scenario.size())
        throw DomainError("quota vector has " + std::to_string(quotas.quotas.size()) +
                          " entries for " + std::to_string(scenario.size()) + " suppliers");
    for (std::size_t i = 0; i < scenario.size(); ++i) {
        const double quota = quotas.quotas[static_cast<Eigen::Index>(i)];
        const auto& spec = scenario.suppliers[i];
        require_nonnegative(quota, spec.id + ": quota");
        if (quota > spec.production)
            throw DomainError(spec.id + ": quota exceeds production");
    }
    // Relative slack absorbs rounding in sums of grid quotas.
    if (quotas.total() > scenario.capacity * (1.0 + 1e-12))
        throw DomainError("total quota exceeds transportation capacity");
}

std::string_view to_string(CaseLabel label) {
    switch (label) {
        case CaseLabel::C1: return "C1";
        case CaseLabel::C2: return "C2";
        case CaseLabel::C3: return "C3";
        case CaseLabel::C4: return "C4";
        case CaseLabel::C5: return "C5";
    }
    return "?";
}

double supplier_profit(const SupplierSpec& spec, double price, double shipped) {
    if (!(shipped >= 0.0 && shipped <= spec.production))
        throw DomainError("supplier_profit: shipped quantity outside [0, production]");
    return shipped * (spec.market_price - price) - spec.inventory_cost * (spec.production - shipped);
}

double transporter_profit(const MarketScenario& scenario, const PriceVector& prices,
                          const Allocation& allocation) {
    return transporter_profit(allocation.quantities, prices.prices, scenario.transport_costs());
}

}  // namespace railcap
