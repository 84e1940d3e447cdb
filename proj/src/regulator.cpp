#include "railcap/regulator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace railcap {

namespace {

GroupTerms& terms_of(SocialUtilityReport::Breakdown& b, Group group) {
    switch (group) {
        case Group::g1: return b.g1;
        case Group::g2: return b.g2;
        case Group::g3: break;
    }
    return b.g3;
}

}  // namespace

SocialUtilityReport social_utility(const MarketScenario& scenario, const QuotaVector& quotas) {
    SocialUtilityReport report{quotas, group_suppliers_adjusted(scenario, quotas), 0.0, {}};
    const auto& grouping = report.grouping;
    const auto& L = quotas.quotas;
    report.breakdown.per_supplier = Eigen::VectorXd::Zero(L.size());

    double residual = scenario.capacity - quotas.total();
    for (const std::size_t i : grouping.g1)
        residual -= scenario.suppliers[i].production - L[static_cast<Eigen::Index>(i)];
    const double q = residual;

    for (std::size_t i = 0; i < scenario.size(); ++i) {
        const auto& s = scenario.suppliers[i];
        const auto ii = static_cast<Eigen::Index>(i);
        const Group group = grouping.group_of(i);

        double shipped = 0.0;
        switch (group) {
            case Group::g1: shipped = s.production; break;
            case Group::g2: shipped = q + L[ii]; break;
            case Group::g3: shipped = L[ii]; break;
        }
        if (std::abs(shipped - grouping.quantities[ii]) > 1e-9 * std::max(1.0, s.production))
            throw InvariantViolation(s.id + ": objective quantity disagrees with the grouping");

        GroupTerms& t = terms_of(report.breakdown, group);
        const double market = shipped * s.cap_margin() - s.inventory_cost * s.production;
        const double social = shipped * s.social_weight;
        t.market_surplus += market;
        t.social_value += social;
        report.breakdown.per_supplier[ii] = market + social;
    }
    report.pi_s = report.breakdown.per_supplier.sum();
    return report;
}

SurplusSplit split_surplus(const MarketScenario& scenario, const SocialUtilityReport& report,
                           const PriceVector& prices) {
    if (static_cast<std::size_t>(prices.prices.size()) != scenario.size())
        throw DomainError("split_surplus: dimension mismatch");
    SurplusSplit out;
    for (std::size_t i = 0; i < scenario.size(); ++i) {
        const auto& s = scenario.suppliers[i];
        const auto ii = static_cast<Eigen::Index>(i);
        const Group group = report.grouping.group_of(i);
        const double price = group == Group::g3 ? s.transport_cost : prices.prices[ii];
        const double shipped = std::min(report.grouping.quantities[ii], s.production);
        const auto g = static_cast<std::size_t>(group) - 1;
        out.supplier[g] += supplier_profit(s, price, shipped);
        out.transporter[g] += shipped * (price - s.transport_cost);
    }
    return out;
}

std::vector<std::size_t> quota_eligible(const MarketScenario& scenario, const Grouping& grouping) {
    double g2_total = 0.0;
    for (const std::size_t j : grouping.g2) g2_total += scenario.suppliers[j].social_coefficient();
    std::vector<std::size_t> out;
    for (const std::size_t i : grouping.g3)
        if (scenario.suppliers[i].social_coefficient() >= g2_total) out.push_back(i);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<bool> summ_search_axes(const MarketScenario& scenario) {
    const std::size_t n = scenario.size();
    std::vector<bool> axes(n, true);
    if (scenario.quota_cap_fraction) return axes;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = scenario.suppliers[i].social_coefficient();
        double absorbed = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && scenario.suppliers[j].social_coefficient() >= w)
                absorbed += scenario.suppliers[j].production;
        if (absorbed >= scenario.capacity) axes[i] = false;
    }
    return axes;
}

namespace {

// Pi_s for a quota vector along a fixed rank order. Mirrors
// group_suppliers_adjusted without building the grouping.
class FastObjective {
public:
    explicit FastObjective(const MarketScenario& scenario)
        : scenario_(scenario),
          order_(rank_descending(scenario.cap_margins(), scenario.price_tolerance, scenario.tie_rule)),
          production_(scenario.production()),
          coefficient_(scenario.social_coefficients()),
          fixed_(-scenario.inventory_costs().dot(production_)) {}

    double operator()(const std::vector<double>& quotas, double quota_total) const {
        double residual = scenario_.capacity - quota_total;
        double value = fixed_;
        for (const std::size_t i : order_) {
            const auto ii = static_cast<Eigen::Index>(i);
            double shipped = quotas[i];
            if (residual > 0.0) {
                const double extra = std::min(production_[ii] - quotas[i], residual);
                shipped += extra;
                residual -= extra;
            }
            value += shipped * coefficient_[ii];
        }
        return value;
    }

private:
    const MarketScenario& scenario_;
    std::vector<std::size_t> order_;
    Eigen::VectorXd production_;
    Eigen::VectorXd coefficient_;
    double fixed_;
};

std::vector<double> candidate_quotas(const SupplierSpec& spec, std::optional<double> cap,
                                     const SummOptions& options) {
    const double upper = cap ? *cap * spec.production : spec.production;
    std::vector<double> points{0.0, upper};
    if (options.integer_grid) {
        for (double v = 1.0; v <= upper; v += 1.0) points.push_back(v);
    } else {
        const std::size_t r = options.grid_points;
        for (std::size_t k = 1; k + 1 < r; ++k) {
            const double v = spec.production * static_cast<double>(k) / static_cast<double>(r - 1);
            if (v <= upper) points.push_back(v);
        }
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

struct Best {
    double pi_s = 0.0;
    double total = 0.0;
    std::vector<double> quotas;
    bool found = false;
};

bool better(double pi_s, double total, const std::vector<double>& quotas, const Best& best) {
    if (!best.found) return true;
    const double eps = 1e-12 * std::max(1.0, std::abs(best.pi_s));
    if (pi_s > best.pi_s + eps) return true;
    if (pi_s < best.pi_s - eps) return false;
    if (total != best.total) return total < best.total;
    return std::lexicographical_compare(quotas.begin(), quotas.end(), best.quotas.begin(),
                                        best.quotas.end());
}

}  // namespace

SocialUtilityReport solve_summ(const MarketScenario& scenario, const SummOptions& options) {
    scenario.validate();
    if (!options.integer_grid && options.grid_points < 2)
        throw DomainError("solve_summ: grid needs at least two points per supplier");

    const std::size_t n = scenario.size();
    const auto axes = summ_search_axes(scenario);
    std::vector<std::vector<double>> candidates(n, std::vector<double>{0.0});
    for (std::size_t i = 0; i < n; ++i)
        if (axes[i]) candidates[i] = candidate_quotas(scenario.suppliers[i], scenario.quota_cap_fraction, options);

    const FastObjective objective(scenario);
    const double upper_cap = scenario.quota_cap_fraction.value_or(1.0);
    std::vector<double> quotas(n, 0.0);
    Best best;

    auto visit = [&](auto&& self, std::size_t i, double used) -> void {
        if (i == n) {
            const double value = objective(quotas, used);
            if (better(value, used, quotas, best)) best = {value, used, quotas, true};
            return;
        }
        const double left = scenario.capacity - used;
        auto try_quota = [&](double q) {
            quotas[i] = q;
            self(self, i + 1, used + q);
        };
        bool tried_left = false;
        for (const double q : candidates[i]) {
            if (q > left) break;
            tried_left = tried_left || q == left;
            try_quota(q);
        }
        const double limit = upper_cap * scenario.suppliers[i].production;
        if (axes[i] && !options.integer_grid && !tried_left && left > 0.0 && left <= limit)
            try_quota(left);
        quotas[i] = 0.0;
    };
    visit(visit, 0, 0.0);

    const QuotaVector chosen{
        Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(best.quotas.data(), static_cast<Eigen::Index>(n)))};
    return social_utility(scenario, chosen);
}

double mre_price_bound(const SupplierSpec& spec, double shipped) {
    if (!spec.mre) return std::numeric_limits<double>::infinity();
    if (!(shipped > 0.0)) throw DomainError(spec.id + ": revenue bound undefined for zero shipment");
    return *spec.mre / shipped + spec.transport_cost;
}

std::vector<MreViolation> check_mre(const MarketScenario& scenario, const PriceVector& prices,
                                    const Eigen::VectorXd& shipped) {
    if (static_cast<std::size_t>(prices.prices.size()) != scenario.size() ||
        static_cast<std::size_t>(shipped.size()) != scenario.size())
        throw DomainError("check_mre: dimension mismatch");
    std::vector<MreViolation> out;
    for (std::size_t i = 0; i < scenario.size(); ++i) {
        const auto ii = static_cast<Eigen::Index>(i);
        if (!scenario.suppliers[i].mre || !(shipped[ii] > 0.0)) continue;
        const double bound = mre_price_bound(scenario.suppliers[i], shipped[ii]);
        if (prices.prices[ii] > bound + scenario.price_tolerance)
            out.push_back({i, prices.prices[ii], bound});
    }
    return out;
}

}  // namespace railcap
