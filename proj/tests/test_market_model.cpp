#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "railcap/errors.hpp"
#include "railcap/market_model.hpp"
#include "railcap/tie_rule.hpp"

using namespace railcap;
using fixtures::supplier;

TEST_CASE("supplier profit at full shipment") {
    CHECK(supplier_profit(supplier("a", 40, 10, 0, 0), 9, 40) == doctest::Approx(40));
}

TEST_CASE("supplier profit with nothing shipped is minus inventory cost") {
    const auto s = supplier("a", 25, 3, 1, 0.5);
    CHECK(supplier_profit(s, 2.7, 0) == doctest::Approx(-12.5));
    CHECK(supplier_profit(s, 100, 0) == doctest::Approx(-12.5));
}

TEST_CASE("oat at zero shipment") {
    const auto oat = fixtures::canadian().suppliers[3];
    CHECK(supplier_profit(oat, 0.118, 0) == doctest::Approx(-2011718.1371).epsilon(1e-12));
}

TEST_CASE("supplier profit rejects shipments outside production") {
    const auto s = supplier("a", 10, 1, 0, 0);
    CHECK_THROWS_AS(supplier_profit(s, 1, -1), DomainError);
    CHECK_THROWS_AS(supplier_profit(s, 1, 10.5), DomainError);
}

TEST_CASE("shipping everything at the price cap matches storing everything") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 20.0);
    for (int k = 0; k < 200; ++k) {
        const auto s = supplier("a", u(rng), u(rng), u(rng), u(rng));
        const double cap = s.market_price + s.inventory_cost;
        CHECK(supplier_profit(s, cap, s.production) ==
              doctest::Approx(supplier_profit(s, 0.0, 0.0)).epsilon(1e-12).scale(s.production * 20));
    }
}

TEST_CASE("supplier profit strictly decreases in price when something ships") {
    const auto s = supplier("a", 10, 5, 1, 0.3);
    double previous = supplier_profit(s, 0, 4);
    for (double p = 0.5; p <= 10; p += 0.5) {
        const double current = supplier_profit(s, p, 4);
        CHECK(current < previous);
        CHECK(previous - current == doctest::Approx(2.0));
        previous = current;
    }
}

TEST_CASE("transporter profit") {
    Eigen::VectorXd u(4), p(4), c(4);
    u << 40, 10, 50, 0;
    p << 1, 0.5, 3, 0;
    c.setZero();
    CHECK(transporter_profit(u, p, c) == doctest::Approx(195));
    CHECK(transporter_profit(Eigen::VectorXd::Zero(4), p, c) == 0.0);

    Eigen::VectorXd one(1), price(1), cost(1);
    one << 7;
    price << 5;
    cost << 2;
    CHECK(transporter_profit(one, price, cost) == doctest::Approx(21));

    CHECK_THROWS_AS(transporter_profit(u, Eigen::VectorXd::Zero(3), c), DomainError);
}

TEST_CASE("transporter profit ignores supplier order") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> v(0.0, 10.0);
    for (int k = 0; k < 100; ++k) {
        Eigen::VectorXd u(5), p(5), c(5);
        for (int i = 0; i < 5; ++i) u[i] = v(rng), p[i] = v(rng), c[i] = v(rng);
        Eigen::PermutationMatrix<Eigen::Dynamic> perm(5);
        perm.setIdentity();
        std::shuffle(perm.indices().data(), perm.indices().data() + 5, rng);
        CHECK(transporter_profit(perm * u, perm * p, perm * c) ==
              doctest::Approx(transporter_profit(u, p, c)).epsilon(1e-12));
    }
}

TEST_CASE("scenario validation") {
    auto s = fixtures::four_supplier_example();
    CHECK_NOTHROW(s.validate());

    SUBCASE("negative capacity") {
        s.capacity = -1;
        CHECK_THROWS_AS(s.validate(), DomainError);
    }
    SUBCASE("negative production") {
        s.suppliers[0].production = -1;
        CHECK_THROWS_AS(s.validate(), DomainError);
    }
    SUBCASE("duplicate id") {
        s.suppliers[1].id = "1";
        CHECK_THROWS_AS(s.validate(), DomainError);
    }
    SUBCASE("cap above one") {
        s.quota_cap_fraction = 1.5;
        CHECK_THROWS_AS(s.validate(), DomainError);
    }
}

TEST_CASE("empty scenario is valid") {
    MarketScenario s;
    CHECK_NOTHROW(s.validate());
    CHECK(s.size() == 0);
}

TEST_CASE("quota validation") {
    const auto s = fixtures::four_supplier_example();
    QuotaVector q = QuotaVector::zeros(4);
    CHECK_NOTHROW(validate_quotas(s, q));
    q.quotas << 40, 30, 30, 0;
    CHECK_NOTHROW(validate_quotas(s, q));
    q.quotas << 41, 0, 0, 0;
    CHECK_THROWS_AS(validate_quotas(s, q), DomainError);
    q.quotas << 40, 30, 31, 0;
    CHECK_THROWS_AS(validate_quotas(s, q), DomainError);
    q.quotas << -1, 0, 0, 0;
    CHECK_THROWS_AS(validate_quotas(s, q), DomainError);
    CHECK_THROWS_AS(validate_quotas(s, QuotaVector::zeros(3)), DomainError);
}

TEST_CASE("price caps") {
    const auto s = fixtures::canadian();
    const auto caps = PriceVector::price_caps(s).prices;
    CHECK(caps[0] == doctest::Approx(16.09));
    CHECK(caps[1] == doctest::Approx(0.0942));
}

TEST_CASE("tie rule parsing") {
    CHECK(parse_tie_rule("index") == TieRule::index());
    CHECK(parse_tie_rule("seed:42") == TieRule::random(42));
    CHECK_FALSE(parse_tie_rule("seed:"));
    CHECK_FALSE(parse_tie_rule("random"));
    CHECK(to_string(TieRule::random(5)) == "seed:5");
    CHECK(parse_tie_rule(to_string(TieRule::random(9))) == TieRule::random(9));
}

TEST_CASE("leader selection") {
    Eigen::VectorXd keys(4);
    keys << 1, 3, 3, 2;
    TieBreaker index(TieRule::index());
    CHECK(select_leader(keys, {true, true, true, true}, 1e-9, index) == 1);
    CHECK(select_leader(keys, {true, false, true, true}, 1e-9, index) == 2);
    CHECK(select_leader(keys, {false, false, false, false}, 1e-9, index) == 4);

    const auto order = rank_descending(keys, 1e-9, TieRule::index());
    CHECK(order == std::vector<std::size_t>{1, 2, 3, 0});
}

TEST_CASE("seeded ties are reproducible and only pick tied entries") {
    Eigen::VectorXd keys(6);
    keys << 5, 5, 5, 1, 5, 0;
    bool saw_non_first = false;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto a = rank_descending(keys, 1e-9, TieRule::random(seed));
        const auto b = rank_descending(keys, 1e-9, TieRule::random(seed));
        CHECK(a == b);
        CHECK(a[4] == 3);
        CHECK(a[5] == 5);
        saw_non_first |= a[0] != 0;
    }
    CHECK(saw_non_first);
}
