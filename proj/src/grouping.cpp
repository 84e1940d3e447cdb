#include "railcap/grouping.hpp"

#include <algorithm>

namespace railcap {

std::string_view to_string(Group group) {
    switch (group) {
        case Group::g1: return "G1";
        case Group::g2: return "G2";
        case Group::g3: return "G3";
    }
    return "?";
}

const std::vector<std::size_t>& Grouping::members(Group group) const {
    switch (group) {
        case Group::g1: return g1;
        case Group::g2: return g2;
        case Group::g3: break;
    }
    return g3;
}

double price_cap(const SupplierSpec& spec) { return spec.market_price + spec.inventory_cost; }

Grouping group_suppliers(const MarketScenario& scenario) {
    return group_suppliers_adjusted(scenario, QuotaVector::zeros(scenario.size()));
}

Grouping group_suppliers_adjusted(const MarketScenario& scenario, const QuotaVector& quotas) {
    scenario.validate();
    validate_quotas(scenario, quotas);

    const std::size_t n = scenario.size();
    const Eigen::VectorXd residual_production = scenario.production() - quotas.quotas;
    double residual_capacity = scenario.capacity - quotas.total();

    Grouping out;
    out.groups.assign(n, Group::g3);
    out.quotas = quotas.quotas;
    out.quantities = quotas.quotas;

    const auto order = rank_descending(scenario.cap_margins(), scenario.price_tolerance, scenario.tie_rule);
    std::size_t next = 0;
    for (; next < n && residual_capacity > 0.0; ++next) {
        const std::size_t l = order[next];
        const auto li = static_cast<Eigen::Index>(l);
        if (residual_production[li] <= residual_capacity) {
            residual_capacity -= residual_production[li];
            out.quantities[li] += residual_production[li];
            out.groups[l] = Group::g1;
            out.g1.push_back(l);
        } else {
            // Loop guard keeps the residual positive, so G2 always ships
            // something beyond its quota.
            out.quantities[li] += residual_capacity;
            out.groups[l] = Group::g2;
            out.g2.push_back(l);
            residual_capacity = 0.0;
        }
    }
    for (; next < n; ++next) out.g3.push_back(order[next]);
    return out;
}

double optimal_price(const MarketScenario& scenario, const Grouping& grouping,
                     std::size_t supplier) {
    const auto top_cap = [&](const std::vector<std::size_t>& members) {
        double best = 0.0;
        for (std::size_t k = 0; k < members.size(); ++k)
            best = k == 0 ? price_cap(scenario.suppliers[members[k]])
                          : std::max(best, price_cap(scenario.suppliers[members[k]]));
        return best;
    };

    const Group group = grouping.group_of(supplier);
    if (group == Group::g3)
        throw DomainError(scenario.suppliers[supplier].id + " is in G3 and ships only its quota");
    if (group == Group::g1 && !grouping.g2.empty()) return top_cap(grouping.g2);
    if (grouping.g3.empty())
        throw UnconstrainedPrice(scenario.suppliers[supplier].id +
                                 ": no competing supplier bounds the price");
    return top_cap(grouping.g3);
}

}  // namespace railcap
