#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "railcap/allocation.hpp"
#include "railcap/errors.hpp"

using namespace railcap;
using fixtures::supplier;

namespace {

MarketScenario with_margins(double capacity, std::vector<double> production, std::vector<double> margins) {
    MarketScenario s;
    s.capacity = capacity;
    for (std::size_t i = 0; i < production.size(); ++i)
        s.suppliers.push_back(supplier("s" + std::to_string(i), production[i], margins[i] + 1, 0, 0));
    return s;
}

PriceVector prices_from_margins(const MarketScenario& s, const std::vector<double>& margins) {
    PriceVector p{Eigen::VectorXd(static_cast<Eigen::Index>(s.size()))};
    for (std::size_t i = 0; i < s.size(); ++i)
        p.prices[static_cast<Eigen::Index>(i)] = margins[i] + s.suppliers[i].transport_cost;
    return p;
}

Eigen::VectorXd vec(std::initializer_list<double> v) {
    Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index k = 0;
    for (const double x : v) out[k++] = x;
    return out;
}

}  // namespace

TEST_CASE("greedy fills the highest margins first") {
    const std::vector<double> m{3, 1, 5, 0.5};
    const auto s = with_margins(100, {40, 30, 50, 50}, m);
    const auto a = allocate(s, prices_from_margins(s, m));
    CHECK(a.quantities == vec({40, 10, 50, 0}));
    REQUIRE(a.trace.size() == 3);
    CHECK(a.trace[0].supplier_id == "s2");
    CHECK(a.trace[1].supplier_id == "s0");
    CHECK(a.trace[2].supplier_id == "s1");
}

TEST_CASE("enough capacity ships everything") {
    const std::vector<double> m{1, 2, 3};
    const auto s = with_margins(1000, {10, 20, 30}, m);
    const auto a = allocate(s, prices_from_margins(s, m));
    CHECK(a.quantities == vec({10, 20, 30}));
    for (const auto& step : a.trace) CHECK(step.label == CaseLabel::C1);
}

TEST_CASE("zero capacity ships nothing") {
    const std::vector<double> m{1, 2};
    const auto s = with_margins(0, {10, 20}, m);
    const auto a = allocate(s, prices_from_margins(s, m));
    CHECK(a.quantities.isZero());
    CHECK(a.trace.empty());
}

TEST_CASE("negative margins are skipped by default and shipped on request") {
    const std::vector<double> m{2, -1};
    auto s = with_margins(50, {10, 20}, m);
    for (auto& spec : s.suppliers) spec.transport_cost = 5;
    const auto p = prices_from_margins(s, m);
    CHECK(allocate(s, p).quantities == vec({10, 0}));
    CHECK(allocate(s, p, NegativeMargins::ship).quantities == vec({10, 20}));
}

TEST_CASE("allocate rejects bad price vectors") {
    const auto s = with_margins(10, {1, 2}, {1, 1});
    CHECK_THROWS_AS(allocate(s, PriceVector{vec({1})}), DomainError);
    CHECK_THROWS_AS(allocate(s, PriceVector{vec({1, -1})}), DomainError);
}

TEST_CASE("case classification") {
    TieBreaker ties(TieRule::index());
    SUBCASE("everything fits") {
        CHECK(classify_case(100, vec({10, 20}), vec({1, 2}), 1e-9, ties).label == CaseLabel::C1);
    }
    SUBCASE("capacity below every production") {
        CHECK(classify_case(5, vec({10, 20}), vec({1, 2}), 1e-9, ties).label == CaseLabel::C5);
    }
    SUBCASE("leader and every other supplier fit individually") {
        const auto d = classify_case(25, vec({10, 20}), vec({1, 2}), 1e-9, ties);
        CHECK(d.label == CaseLabel::C2);
        CHECK(d.leader == 1);
    }
    SUBCASE("leader fits, a larger supplier does not") {
        CHECK(classify_case(25, vec({30, 20}), vec({1, 2}), 1e-9, ties).label == CaseLabel::C4);
    }
    SUBCASE("leader does not fit, a smaller supplier does") {
        CHECK(classify_case(15, vec({10, 20}), vec({1, 2}), 1e-9, ties).label == CaseLabel::C3);
    }
    SUBCASE("exact margin tie goes to the lower index") {
        CHECK(classify_case(15, vec({10, 20}), vec({2, 2}), 1e-9, ties).leader == 0);
    }
}

TEST_CASE("greedy profit equals the knapsack optimum") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> count(1, 6), small(0, 20), margin(-20, 20);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = count(rng);
        std::vector<int> d(static_cast<std::size_t>(n)), m(static_cast<std::size_t>(n));
        std::vector<double> dd, mm;
        for (int i = 0; i < n; ++i) {
            d[static_cast<std::size_t>(i)] = small(rng);
            m[static_cast<std::size_t>(i)] = margin(rng);
            dd.push_back(d[static_cast<std::size_t>(i)]);
            mm.push_back(m[static_cast<std::size_t>(i)]);
        }
        const int capacity = small(rng) * 2;
        auto s = with_margins(capacity, dd, mm);
        for (auto& spec : s.suppliers) spec.transport_cost = 0, spec.market_price = 0;
        const auto p = prices_from_margins(s, mm);
        // Prices must be nonnegative, so shift price and cost together.
        PriceVector shifted = p;
        for (std::size_t i = 0; i < s.size(); ++i) {
            s.suppliers[i].transport_cost = 20;
            shifted.prices[static_cast<Eigen::Index>(i)] += 20;
        }
        const auto a = allocate(s, shifted);
        CHECK(transporter_profit(s, shifted, a) == doctest::Approx(oracle::knapsack_optimum(d, m, capacity)));
    }
}

TEST_CASE("allocation trace follows the case transition graph") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        auto s = oracle::random_scenario(rng, 6, 20, 20);
        const auto a = allocate(s, PriceVector::price_caps(s), NegativeMargins::ship);
        for (std::size_t k = 1; k < a.trace.size(); ++k) {
            const auto prev = a.trace[k - 1].label;
            const auto next = a.trace[k].label;
            if (prev == CaseLabel::C1) CHECK(next == CaseLabel::C1);
            CHECK(prev != CaseLabel::C3);
            CHECK(prev != CaseLabel::C5);
            if (prev == CaseLabel::C4) CHECK(next != CaseLabel::C2);
            if (prev == CaseLabel::C2) CHECK(next != CaseLabel::C1);
        }
    }
}

TEST_CASE("at most one partial shipment") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        const auto s = oracle::random_scenario(rng, 6, 20, 20);
        const auto a = allocate(s, PriceVector::price_caps(s));
        int partial = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            const double u = a.quantities[static_cast<Eigen::Index>(i)];
            if (u > 0 && u < s.suppliers[i].production) ++partial;
        }
        CHECK(partial <= 1);
        CHECK(a.quantities.sum() <= s.capacity + 1e-9);
    }
}

TEST_CASE("more capacity never lowers any shipment") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        auto s = oracle::random_scenario(rng, 6, 20, 20);
        const auto p = PriceVector::price_caps(s);
        Eigen::VectorXd previous = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(s.size()));
        for (int t = 0; t <= 130; t += 5) {
            s.capacity = t;
            const auto a = allocate(s, p);
            CHECK(((a.quantities - previous).array() >= 0.0).all());
            previous = a.quantities;
        }
    }
}

TEST_CASE("seeded tie rule yields an optimal allocation too") {
    const std::vector<double> m{2, 2, 2};
    auto s = with_margins(25, {10, 10, 10}, m);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        s.tie_rule = TieRule::random(seed);
        const auto p = prices_from_margins(s, m);
        const auto a = allocate(s, p);
        CHECK(transporter_profit(s, p, a) == doctest::Approx(50));
        CHECK(a.quantities.sum() == doctest::Approx(25));
    }
}
