#pragma once

#include <string>
#include <vector>

#include "railcap/market_model.hpp"
#include "railcap/scenario_io.hpp"

namespace railcap::fixtures {

inline SupplierSpec supplier(std::string id, double production, double price, double cost, double inventory,
                             double weight = 0.0) {
    SupplierSpec s;
    s.id = std::move(id);
    s.production = production;
    s.market_price = price;
    s.transport_cost = cost;
    s.inventory_cost = inventory;
    s.social_weight = weight;
    return s;
}

/// Four suppliers, T = 100, no inventory cost, zero transport cost.
inline MarketScenario four_supplier_example() {
    MarketScenario s;
    s.capacity = 100;
    s.suppliers = {supplier("1", 40, 10, 0, 0), supplier("2", 30, 9, 0, 0), supplier("3", 50, 12, 0, 0),
                   supplier("4", 50, 6, 0, 0)};
    return s;
}

inline MarketScenario canadian() { return parse_scenario(bundled_canadian_csv()); }
inline MarketScenario canadian_scenario2() { return parse_scenario(bundled_canadian_scenario2_csv()); }

inline constexpr double kOilD = 128185505;
inline constexpr double kCornD = 440916666;
inline constexpr double kBarleyD = 440924524;
inline constexpr double kOatD = 275577827;

}  // namespace railcap::fixtures
