#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "railcap/market_model.hpp"

namespace railcap {

enum class ParseErrorCode {
    malformed_header = 1,  // "# key=value" line that does not parse
    unknown_key,
    missing_capacity,
    missing_column,        // header lacks a required column, or a row is short
    unknown_column,
    extra_field,
    non_numeric,
    negative_value,
    duplicate_id,
    empty_id,
    out_of_range,          // cap outside [0, 1], grid < 2, ...
    io_error,
};

/// Stable short code, e.g. "E06" for non_numeric.
std::string code_name(ParseErrorCode code);

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorCode code, std::size_t line, std::size_t column, const std::string& what);

    ParseErrorCode code() const { return code_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    ParseErrorCode code_;
    std::size_t line_;
    std::size_t column_;
};

/// A scenario plus the solver settings carried in its header.
///
/// Text layout:
///
///     # capacity=650000000
///     # cap=0.2            (optional quota cap fraction)
///     # tie_rule=index     (or seed:<n>)
///     # grid=51
///     # tolerance=1e-9
///     id,production,market_price,transport_cost,inventory_cost,social_weight,mre
///     Crude Oil,128185505,15.3,1.297,0.79,0.1,
///
/// `#` lines without '=' are comments; the mre column may be omitted or
/// left empty.
struct ScenarioFile {
    MarketScenario scenario;
    std::size_t grid_points = 51;

    friend bool operator==(const ScenarioFile&, const ScenarioFile&) = default;
};

ScenarioFile parse_scenario_file(std::string_view text);
MarketScenario parse_scenario(std::string_view text);

/// Text that parse_scenario_file maps back to an equal ScenarioFile.
std::string render_scenario(const ScenarioFile& file);

/// Reads a scenario from disk; "canadian" and "canadian-scenario2" name the
/// bundled data sets when no such file exists.
ScenarioFile load_scenario_file(const std::filesystem::path& path);

/// Four-product rail case (crude oil, corn, barley, oat) at
/// T = 650,000,000 bushels with equal social weight 0.1.
std::string_view bundled_canadian_csv();
/// Same market with oat's social weight raised to 1.
std::string_view bundled_canadian_scenario2_csv();

/// "id,value" lines. Every supplier needs a price; unlisted suppliers get
/// a zero quota.
PriceVector parse_price_file(std::string_view text, const MarketScenario& scenario);
QuotaVector parse_quota_file(std::string_view text, const MarketScenario& scenario);

/// Comma-separated numbers, e.g. "0.5,0.4,0.9".
std::vector<double> parse_number_list(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace railcap
