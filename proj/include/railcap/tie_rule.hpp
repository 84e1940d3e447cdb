#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace railcap {

/// How equal keys are ordered when picking the next supplier.
///
/// `lowest_index` is fully deterministic. `seeded` reproduces the
/// "break ties randomly" behaviour with a reproducible stream: every
/// solver call starts a fresh generator from `seed`.
struct TieRule {
    enum class Kind { lowest_index, seeded };

    Kind kind = Kind::lowest_index;
    std::uint64_t seed = 0;

    static TieRule index() { return {}; }
    static TieRule random(std::uint64_t seed) { return {Kind::seeded, seed}; }

    friend bool operator==(const TieRule&, const TieRule&) = default;
};

/// Parses "index" or "seed:<n>".
std::optional<TieRule> parse_tie_rule(std::string_view text);
std::string to_string(const TieRule& rule);

/// Stateful picker built from a TieRule. One instance per solver run.
class TieBreaker {
public:
    explicit TieBreaker(const TieRule& rule);

    /// Chooses one of `tied` (ascending indices, nonempty).
    std::size_t pick(std::span<const std::size_t> tied);

private:
    std::optional<std::mt19937_64> rng_;
};

/// Index of the largest `keys[i]` among `active` entries; keys within
/// `tolerance` of the maximum are tied and resolved by `ties`.
/// Returns keys.size() when nothing is active.
std::size_t select_leader(const Eigen::VectorXd& keys, const std::vector<bool>& active,
                          double tolerance, TieBreaker& ties);

/// Full descending order produced by repeated select_leader calls.
std::vector<std::size_t> rank_descending(const Eigen::VectorXd& keys, double tolerance,
                                         const TieRule& rule);

}  // namespace railcap
