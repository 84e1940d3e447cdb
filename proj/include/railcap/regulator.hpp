#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "railcap/grouping.hpp"
#include "railcap/market_model.hpp"

namespace railcap {

/// Contribution of one supplier group to the regulator's objective.
///
/// `market_surplus` is supplier profit plus carrier profit. The transport
/// price cancels between the two, so this term is price-free; see
/// split_surplus for the two halves under a concrete price vector.
struct GroupTerms {
    double market_surplus = 0.0;
    double social_value = 0.0;

    double total() const { return market_surplus + social_value; }
};

struct SocialUtilityReport {
    QuotaVector quotas;
    Grouping grouping;  // after quotas
    double pi_s = 0.0;

    struct Breakdown {
        GroupTerms g1, g2, g3;
        Eigen::VectorXd per_supplier;  // each supplier's share of pi_s
        double total() const { return g1.total() + g2.total() + g3.total(); }
    } breakdown;
};

/// Regulator objective for a quota vector, with the carrier and suppliers
/// reacting through the adjusted grouping:
///
///   pi_s = sum_{G3} (L_i w_i - g_i D_i) + sum_{G1} D_i (S_i + b_i - c_i)
///        + sum_{G2} ((Q + L_i) w_i - g_i D_i),
///   Q    = (T - sum L) - sum_{G1} (D_i - L_i),  w_i = S_i + g_i + b_i - c_i.
///
/// Assumes revenue entitlements do not bind. Takes no prices: the value
/// does not depend on them.
SocialUtilityReport social_utility(const MarketScenario& scenario, const QuotaVector& quotas);

/// Supplier and carrier profit per group for concrete prices. G3 members
/// ship their quota at cost, so their price entry is ignored.
struct SurplusSplit {
    double supplier[3] = {0.0, 0.0, 0.0};     // indexed by Group - 1
    double transporter[3] = {0.0, 0.0, 0.0};
};
SurplusSplit split_surplus(const MarketScenario& scenario, const SocialUtilityReport& report,
                           const PriceVector& prices);

/// G3 suppliers whose w_i reaches the summed w of the G2 member(s); the
/// rest are screened out as quota candidates.
std::vector<std::size_t> quota_eligible(const MarketScenario& scenario, const Grouping& grouping);

struct SummOptions {
    /// Points per supplier axis on the uniform grid {0, D/(r-1), ..., D}.
    std::size_t grid_points = 51;
    /// Enumerate every integer quota 0..D_i instead of the uniform grid.
    bool integer_grid = false;
};

/// Exhaustive quota search maximising social_utility. Candidate quotas per
/// supplier are the grid points plus 0, D_i, the cap point cap*D_i and the
/// capacity left by earlier suppliers; quotas above cap*D_i or exceeding T
/// in total are skipped. Ties on pi_s go to the smaller total quota, then
/// the lexicographically smaller vector.
SocialUtilityReport solve_summ(const MarketScenario& scenario, const SummOptions& options = {});

/// Suppliers whose quota the search above may leave nonzero; the others are
/// pinned at zero because higher-w competitors can absorb all capacity.
/// Without a quota cap only; with one every supplier is searched.
std::vector<bool> summ_search_axes(const MarketScenario& scenario);

/// Highest price compatible with the revenue entitlement: MRE_i/u_i + c_i.
/// Infinity when the supplier has no entitlement cap.
double mre_price_bound(const SupplierSpec& spec, double shipped);

struct MreViolation {
    std::size_t supplier;
    double price;
    double bound;
};

/// Offered prices above their entitlement bound for the shipped amounts.
std::vector<MreViolation> check_mre(const MarketScenario& scenario, const PriceVector& prices,
                                    const Eigen::VectorXd& shipped);

}  // namespace railcap
