#include "railcap/scenario_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_set>

namespace railcap {

std::string code_name(ParseErrorCode code) {
    const int value = static_cast<int>(code);
    return (value < 10 ? "E0" : "E") + std::to_string(value);
}

ParseError::ParseError(ParseErrorCode code, std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         what + " [" + code_name(code) + "]"),
      code_(code),
      line_(line),
      column_(column) {}

namespace {

constexpr std::string_view kCanadian =
    "# Rail capacity case: crude oil and three grains, units of bushels and CAD.\n"
    "# capacity=650000000\n"
    "# tie_rule=index\n"
    "# grid=51\n"
    "id,production,market_price,transport_cost,inventory_cost,social_weight,mre\n"
    "Crude Oil,128185505,15.3,1.297,0.79,0.1,\n"
    "Corn,440916666,0.09,0.06,0.0042,0.1,\n"
    "Barley,440924524,0.111,0.113,0.0049,0.1,\n"
    "Oat,275577827,0.11,0.118,0.0073,0.1,\n";

constexpr std::string_view kCanadianScenario2 =
    "# Rail capacity case with oat weighted ten times the other products.\n"
    "# capacity=650000000\n"
    "# tie_rule=index\n"
    "# grid=51\n"
    "id,production,market_price,transport_cost,inventory_cost,social_weight,mre\n"
    "Crude Oil,128185505,15.3,1.297,0.79,0.1,\n"
    "Corn,440916666,0.09,0.06,0.0042,0.1,\n"
    "Barley,440924524,0.111,0.113,0.0049,0.1,\n"
    "Oat,275577827,0.11,0.118,0.0073,1,\n";

enum Column { kId, kProduction, kMarketPrice, kTransportCost, kInventoryCost, kSocialWeight, kMre, kColumnCount };

constexpr std::array<std::string_view, kColumnCount> kColumnNames{
    "id", "production", "market_price", "transport_cost", "inventory_cost", "social_weight", "mre"};

struct Field {
    std::string_view text;
    std::size_t column;  // 1-based character position
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<Field> split_fields(std::string_view line) {
    std::vector<Field> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        const auto raw = line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        const auto lead = raw.find_first_not_of(" \t");
        out.push_back({trim(raw), start + 1 + (lead == std::string_view::npos ? 0 : lead)});
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::optional<double> to_number(std::string_view text) {
    text = trim(text);
    if (text.empty()) return std::nullopt;
    if (text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(value)) return std::nullopt;
    return value;
}

double numeric_field(const Field& field, std::size_t line, std::string_view what) {
    const auto value = to_number(field.text);
    if (!value)
        throw ParseError(ParseErrorCode::non_numeric, line, field.column,
                         std::string(what) + " '" + std::string(field.text) + "' is not a number");
    if (*value < 0.0)
        throw ParseError(ParseErrorCode::negative_value, line, field.column, "negative " + std::string(what));
    return *value;
}

std::string format_number(double value) {
    std::array<char, 64> buffer{};
    const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return std::string(buffer.data(), end);
}

void parse_header_line(std::string_view body, std::size_t line, ScenarioFile& file, bool& has_capacity) {
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) return;  // comment
    const auto key = trim(body.substr(0, eq));
    const auto value = trim(body.substr(eq + 1));
    const std::size_t column = static_cast<std::size_t>(value.data() - body.data()) + 2;
    auto& scenario = file.scenario;

    const auto number = [&](std::string_view what) {
        return numeric_field(Field{value, column}, line, what);
    };

    if (key == "capacity") {
        scenario.capacity = number("capacity");
        has_capacity = true;
    } else if (key == "cap") {
        const double cap = number("quota cap");
        if (cap > 1.0) throw ParseError(ParseErrorCode::out_of_range, line, column, "quota cap must lie in [0, 1]");
        scenario.quota_cap_fraction = cap;
    } else if (key == "tolerance") {
        scenario.price_tolerance = number("tolerance");
    } else if (key == "grid") {
        const double grid = number("grid");
        if (grid < 2.0 || grid != std::floor(grid))
            throw ParseError(ParseErrorCode::out_of_range, line, column, "grid must be an integer >= 2");
        file.grid_points = static_cast<std::size_t>(grid);
    } else if (key == "tie_rule") {
        const auto rule = parse_tie_rule(value);
        if (!rule)
            throw ParseError(ParseErrorCode::malformed_header, line, column,
                             "tie_rule must be 'index' or 'seed:<n>'");
        scenario.tie_rule = *rule;
    } else if (key.empty()) {
        throw ParseError(ParseErrorCode::malformed_header, line, 2, "header entry without a key");
    } else {
        throw ParseError(ParseErrorCode::unknown_key, line, 2, "unknown header key '" + std::string(key) + "'");
    }
}

}  // namespace

ScenarioFile parse_scenario_file(std::string_view text) {
    ScenarioFile file;
    bool has_capacity = false;
    std::optional<std::array<int, kColumnCount>> layout;  // column position of each named field
    std::size_t width = 0;
    std::unordered_set<std::string> ids;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        const auto line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '#') {
            parse_header_line(raw.substr(raw.find('#') + 1), line_no, file, has_capacity);
            continue;
        }

        const auto fields = split_fields(raw);
        if (!layout) {
            std::array<int, kColumnCount> positions;
            positions.fill(-1);
            for (std::size_t k = 0; k < fields.size(); ++k) {
                std::size_t c = 0;
                while (c < kColumnCount && kColumnNames[c] != fields[k].text) ++c;
                if (c == kColumnCount)
                    throw ParseError(ParseErrorCode::unknown_column, line_no, fields[k].column,
                                     "unknown column '" + std::string(fields[k].text) + "'");
                positions[c] = static_cast<int>(k);
            }
            for (std::size_t c = 0; c < kMre; ++c)
                if (positions[c] < 0)
                    throw ParseError(ParseErrorCode::missing_column, line_no, 1,
                                     "missing column '" + std::string(kColumnNames[c]) + "'");
            layout = positions;
            width = fields.size();
            continue;
        }

        if (fields.size() < width)
            throw ParseError(ParseErrorCode::missing_column, line_no, raw.size() + 1,
                             "row has " + std::to_string(fields.size()) + " fields, expected " + std::to_string(width));
        if (fields.size() > width)
            throw ParseError(ParseErrorCode::extra_field, line_no, fields[width].column,
                             "row has more fields than the header");

        const auto at = [&](Column c) { return fields[static_cast<std::size_t>((*layout)[c])]; };
        SupplierSpec spec;
        const Field id = at(kId);
        if (id.text.empty()) throw ParseError(ParseErrorCode::empty_id, line_no, id.column, "empty supplier id");
        spec.id = std::string(id.text);
        if (!ids.insert(spec.id).second)
            throw ParseError(ParseErrorCode::duplicate_id, line_no, id.column, "duplicate id '" + spec.id + "'");
        spec.production = numeric_field(at(kProduction), line_no, "production");
        spec.market_price = numeric_field(at(kMarketPrice), line_no, "market price");
        spec.transport_cost = numeric_field(at(kTransportCost), line_no, "transport cost");
        spec.inventory_cost = numeric_field(at(kInventoryCost), line_no, "inventory cost");
        spec.social_weight = numeric_field(at(kSocialWeight), line_no, "social weight");
        if ((*layout)[kMre] >= 0 && !at(kMre).text.empty()) spec.mre = numeric_field(at(kMre), line_no, "mre");
        file.scenario.suppliers.push_back(std::move(spec));
    }

    if (!has_capacity) throw ParseError(ParseErrorCode::missing_capacity, 1, 1, "header lacks '# capacity=<T>'");
    return file;
}

MarketScenario parse_scenario(std::string_view text) { return parse_scenario_file(text).scenario; }

std::string render_scenario(const ScenarioFile& file) {
    const auto& s = file.scenario;
    std::ostringstream out;
    out << "# capacity=" << format_number(s.capacity) << '\n';
    if (s.quota_cap_fraction) out << "# cap=" << format_number(*s.quota_cap_fraction) << '\n';
    out << "# tie_rule=" << to_string(s.tie_rule) << '\n';
    out << "# grid=" << file.grid_points << '\n';
    out << "# tolerance=" << format_number(s.price_tolerance) << '\n';
    out << "id,production,market_price,transport_cost,inventory_cost,social_weight,mre\n";
    for (const auto& r : s.suppliers) {
        out << r.id << ',' << format_number(r.production) << ',' << format_number(r.market_price) << ','
            << format_number(r.transport_cost) << ',' << format_number(r.inventory_cost) << ','
            << format_number(r.social_weight) << ',';
        if (r.mre) out << format_number(*r.mre);
        out << '\n';
    }
    return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(ParseErrorCode::io_error, 0, 0, "cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

ScenarioFile load_scenario_file(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) {
        if (path == "canadian") return parse_scenario_file(kCanadian);
        if (path == "canadian-scenario2") return parse_scenario_file(kCanadianScenario2);
    }
    return parse_scenario_file(read_text_file(path));
}

std::string_view bundled_canadian_csv() { return kCanadian; }
std::string_view bundled_canadian_scenario2_csv() { return kCanadianScenario2; }

namespace {

Eigen::VectorXd parse_keyed_values(std::string_view text, const MarketScenario& scenario,
                                   std::string_view what, std::vector<bool>& seen) {
    Eigen::VectorXd values = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(scenario.size()));
    seen.assign(scenario.size(), false);
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        const auto fields = split_fields(raw);
        if (fields.size() < 2)
            throw ParseError(ParseErrorCode::missing_column, line_no, raw.size() + 1, "expected 'id,value'");
        if (fields.size() > 2)
            throw ParseError(ParseErrorCode::extra_field, line_no, fields[2].column, "expected 'id,value'");
        if (fields[0].text == "id") continue;  // optional header row
        const std::size_t i = scenario.find(fields[0].text);
        if (i == scenario.size())
            throw ParseError(ParseErrorCode::unknown_key, line_no, fields[0].column,
                             "unknown supplier '" + std::string(fields[0].text) + "'");
        if (seen[i])
            throw ParseError(ParseErrorCode::duplicate_id, line_no, fields[0].column,
                             "supplier '" + std::string(fields[0].text) + "' listed twice");
        seen[i] = true;
        values[static_cast<Eigen::Index>(i)] = numeric_field(fields[1], line_no, what);
    }
    return values;
}

}  // namespace

PriceVector parse_price_file(std::string_view text, const MarketScenario& scenario) {
    std::vector<bool> seen;
    PriceVector out{parse_keyed_values(text, scenario, "price", seen)};
    for (std::size_t i = 0; i < scenario.size(); ++i)
        if (!seen[i])
            throw ParseError(ParseErrorCode::missing_column, 0, 0,
                             "no price given for '" + scenario.suppliers[i].id + "'");
    return out;
}

QuotaVector parse_quota_file(std::string_view text, const MarketScenario& scenario) {
    std::vector<bool> seen;
    return {parse_keyed_values(text, scenario, "quota", seen)};
}

std::vector<double> parse_number_list(std::string_view text) {
    std::vector<double> out;
    for (const auto& field : split_fields(text)) {
        const auto value = to_number(field.text);
        if (!value)
            throw ParseError(ParseErrorCode::non_numeric, 1, field.column,
                             "'" + std::string(field.text) + "' is not a number");
        out.push_back(*value);
    }
    return out;
}

}  // namespace railcap
