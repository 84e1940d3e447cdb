#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "railcap/market_model.hpp"

namespace railcap {

/// G1 ships everything, G2 ships part, G3 ships nothing beyond its quota.
enum class Group { g1 = 1, g2 = 2, g3 = 3 };
std::string_view to_string(Group group);

struct Grouping {
    std::vector<std::size_t> g1, g2, g3;  // supplier indices, in order of assignment
    std::vector<Group> groups;            // per supplier
    Eigen::VectorXd quantities;           // u_i including any quota
    Eigen::VectorXd quotas;               // L_i the grouping was computed with

    Group group_of(std::size_t supplier) const { return groups.at(supplier); }
    const std::vector<std::size_t>& members(Group group) const;
};

/// Price cap S_i + g_i: above it the supplier prefers storing to shipping.
double price_cap(const SupplierSpec& spec);

/// Ranks suppliers by S_i + g_i - c_i and fills capacity in that order:
/// suppliers that fit join G1, the first that does not joins G2 with the
/// residual, the rest join G3.
Grouping group_suppliers(const MarketScenario& scenario);

/// Same procedure on T - sum(L) and D_i - L_i; quantities then add each
/// supplier's quota back. Suppliers never reached while residual capacity
/// remains (including fully-quota'd ones) are G3 and ship exactly L_i.
Grouping group_suppliers_adjusted(const MarketScenario& scenario, const QuotaVector& quotas);

/// Best price a G1 or G2 member can suggest: a G1 member matches the top
/// price cap in G2 (G3 if G2 is empty); a G2 member matches the top price
/// cap in G3. Throws UnconstrainedPrice when that set is empty and
/// DomainError for G3 members.
double optimal_price(const MarketScenario& scenario, const Grouping& grouping,
                     std::size_t supplier);

}  // namespace railcap
