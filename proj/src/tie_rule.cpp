#include "railcap/tie_rule.hpp"

#include <charconv>
#include <limits>

namespace railcap {

std::optional<TieRule> parse_tie_rule(std::string_view text) {
    if (text == "index") return TieRule::index();
    constexpr std::string_view prefix = "seed:";
    if (!text.starts_with(prefix)) return std::nullopt;
    text.remove_prefix(prefix.size());
    std::uint64_t seed = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
    if (ec != std::errc{} || end != text.data() + text.size() || text.empty()) return std::nullopt;
    return TieRule::random(seed);
}

std::string to_string(const TieRule& rule) {
    if (rule.kind == TieRule::Kind::lowest_index) return "index";
    return "seed:" + std::to_string(rule.seed);
}

TieBreaker::TieBreaker(const TieRule& rule) {
    if (rule.kind == TieRule::Kind::seeded) rng_.emplace(rule.seed);
}

std::size_t TieBreaker::pick(std::span<const std::size_t> tied) {
    if (!rng_ || tied.size() == 1) return tied.front();
    std::uniform_int_distribution<std::size_t> dist(0, tied.size() - 1);
    return tied[dist(*rng_)];
}

std::size_t select_leader(const Eigen::VectorXd& keys, const std::vector<bool>& active,
                          double tolerance, TieBreaker& ties) {
    const auto n = static_cast<std::size_t>(keys.size());
    double best = -std::numeric_limits<double>::infinity();
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (!active[i]) continue;
        const double key = keys[static_cast<Eigen::Index>(i)];
        if (!any || key > best) best = key;
        any = true;
    }
    if (!any) return n;

    std::vector<std::size_t> tied;
    for (std::size_t i = 0; i < n; ++i)
        if (active[i] && keys[static_cast<Eigen::Index>(i)] >= best - tolerance) tied.push_back(i);
    return ties.pick(tied);
}

std::vector<std::size_t> rank_descending(const Eigen::VectorXd& keys, double tolerance,
                                         const TieRule& rule) {
    const auto n = static_cast<std::size_t>(keys.size());
    TieBreaker ties(rule);
    std::vector<bool> active(n, true);
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t leader = select_leader(keys, active, tolerance, ties);
        active[leader] = false;
        order.push_back(leader);
    }
    return order;
}

}  // namespace railcap
