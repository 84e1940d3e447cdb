#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "railcap/equilibrium.hpp"
#include "railcap/grouping.hpp"
#include "railcap/market_model.hpp"
#include "railcap/regulator.hpp"
#include "railcap/sensitivity.hpp"

namespace railcap {

enum class OutputFormat { table, machine };
std::optional<OutputFormat> parse_output_format(std::string_view text);

/// 128185505 -> "128,185,505"; non-integers keep two decimals.
std::string format_quantity(double value);

std::string render_allocation(const MarketScenario& scenario, const PriceVector& prices,
                              const Allocation& allocation, OutputFormat format);

/// Product / margin at cap / group / transported amount, plus the original
/// group of each product when `baseline` is given.
std::string render_grouping(const MarketScenario& scenario, const Grouping& grouping, OutputFormat format,
                            const Grouping* baseline = nullptr);

/// Quota plan, resulting grouping and objective breakdown. The machine
/// format is JSON with a fixed key order and is byte-stable for equal input.
std::string render_report(const MarketScenario& scenario, const SocialUtilityReport& report,
                          OutputFormat format, const Grouping* baseline = nullptr);

std::string render_msne(const MsneInput& input, const Eigen::VectorXd& cdf, const IndifferenceCheck& check,
                        OutputFormat format);

/// Table format is delimiter-separated "T,pi_s,regime" rows.
std::string render_sweep(const SweepResult& result, OutputFormat format);

}  // namespace railcap
