#include "railcap/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace railcap {

using Json = nlohmann::ordered_json;

std::optional<OutputFormat> parse_output_format(std::string_view text) {
    if (text == "table") return OutputFormat::table;
    if (text == "machine") return OutputFormat::machine;
    return std::nullopt;
}

namespace {

std::string with_separators(const std::string& digits) {
    std::string out;
    for (std::size_t k = 0; k < digits.size(); ++k) {
        if (k != 0 && (digits.size() - k) % 3 == 0) out.push_back(',');
        out.push_back(digits[k]);
    }
    return out;
}

std::string significant(double value) {
    std::array<char, 64> buffer{};
    std::snprintf(buffer.data(), buffer.size(), "%.10g", value);
    return buffer.data();
}

std::string shortest(double value) {
    std::array<char, 64> buffer{};
    const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return std::string(buffer.data(), end);
}

// Shortest round-trip digits without an exponent.
std::string plain(double value) {
    std::array<char, 512> buffer{};
    const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value, std::chars_format::fixed);
    return std::string(buffer.data(), end);
}

std::string fixed(double value, int digits) {
    std::array<char, 64> buffer{};
    std::snprintf(buffer.data(), buffer.size(), "%.*f", digits, value);
    return buffer.data();
}

// Left-aligned first column, right-aligned numbers.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    std::string str() const {
        std::vector<std::size_t> width(rows_.front().size(), 0);
        for (const auto& row : rows_)
            for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
        std::ostringstream out;
        const auto rule = [&] {
            for (std::size_t c = 0; c < width.size(); ++c) out << (c ? "-+-" : "") << std::string(width[c], '-');
            out << '\n';
        };
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            for (std::size_t c = 0; c < rows_[r].size(); ++c) {
                const auto& cell = rows_[r][c];
                const auto pad = std::string(width[c] - cell.size(), ' ');
                out << (c ? " | " : "") << (c == 0 ? cell + pad : pad + cell);
            }
            out << '\n';
            if (r == 0) rule();
        }
        return out.str();
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

Json grouping_json(const MarketScenario& scenario, const Grouping& grouping) {
    Json out = Json::object();
    for (const Group g : {Group::g1, Group::g2, Group::g3}) {
        Json ids = Json::array();
        for (const std::size_t i : grouping.members(g)) ids.push_back(scenario.suppliers[i].id);
        out[std::string(to_string(g))] = ids;
    }
    return out;
}

Json terms_json(const GroupTerms& t) {
    Json out;
    out["market_surplus"] = t.market_surplus;
    out["social_value"] = t.social_value;
    out["total"] = t.total();
    return out;
}

}  // namespace

std::string format_quantity(double value) {
    const double magnitude = std::abs(value);
    const bool integral = std::abs(magnitude - std::round(magnitude)) <= 1e-9 * std::max(1.0, magnitude);
    const std::string text = integral ? fixed(std::round(magnitude), 0) : fixed(magnitude, 2);
    const auto dot = text.find('.');
    std::string out = with_separators(text.substr(0, dot));
    if (dot != std::string::npos) out += text.substr(dot);
    const bool negative = value < 0.0 && out.find_first_not_of("0,.") != std::string::npos;
    return negative ? "-" + out : out;
}

std::string render_allocation(const MarketScenario& scenario, const PriceVector& prices,
                              const Allocation& allocation, OutputFormat format) {
    const Eigen::VectorXd margins = prices.prices - scenario.transport_costs();
    const double profit = transporter_profit(scenario, prices, allocation);
    const auto violations = check_mre(scenario, prices, allocation.quantities);

    if (format == OutputFormat::machine) {
        Json doc;
        doc["capacity"] = scenario.capacity;
        Json rows = Json::array();
        for (std::size_t i = 0; i < scenario.size(); ++i) {
            Json row;
            row["id"] = scenario.suppliers[i].id;
            row["price"] = prices.prices[static_cast<Eigen::Index>(i)];
            row["margin"] = margins[static_cast<Eigen::Index>(i)];
            row["shipped"] = allocation.quantities[static_cast<Eigen::Index>(i)];
            rows.push_back(row);
        }
        doc["suppliers"] = rows;
        Json trace = Json::array();
        for (const auto& step : allocation.trace)
            trace.push_back(Json{{"supplier", step.supplier_id}, {"case", std::string(to_string(step.label))}});
        doc["trace"] = trace;
        doc["transporter_profit"] = profit;
        Json mre = Json::array();
        for (const auto& v : violations)
            mre.push_back(Json{{"supplier", scenario.suppliers[v.supplier].id}, {"price", v.price}, {"bound", v.bound}});
        doc["mre_violations"] = mre;
        return doc.dump(2) + "\n";
    }

    TextTable table({"Product", "p - c", "Transported Amount"});
    for (std::size_t i = 0; i < scenario.size(); ++i)
        table.add({scenario.suppliers[i].id, significant(margins[static_cast<Eigen::Index>(i)]),
                   format_quantity(allocation.quantities[static_cast<Eigen::Index>(i)])});
    std::ostringstream out;
    out << table.str() << "\nTrace:";
    for (std::size_t k = 0; k < allocation.trace.size(); ++k)
        out << (k ? " ->" : "") << ' ' << allocation.trace[k].supplier_id << " ("
            << to_string(allocation.trace[k].label) << ')';
    out << "\nTransporter profit: " << format_quantity(profit) << '\n';
    for (const auto& v : violations)
        out << "MRE violation: " << scenario.suppliers[v.supplier].id << " offers " << shortest(v.price)
            << " above bound " << shortest(v.bound) << '\n';
    return out.str();
}

std::string render_grouping(const MarketScenario& scenario, const Grouping& grouping, OutputFormat format,
                            const Grouping* baseline) {
    if (format == OutputFormat::machine) {
        Json doc;
        doc["capacity"] = scenario.capacity;
        doc["groups"] = grouping_json(scenario, grouping);
        Json rows = Json::array();
        for (std::size_t i = 0; i < scenario.size(); ++i) {
            const auto ii = static_cast<Eigen::Index>(i);
            Json row;
            row["id"] = scenario.suppliers[i].id;
            row["cap_margin"] = scenario.suppliers[i].cap_margin();
            if (baseline) row["original_group"] = std::string(to_string(baseline->group_of(i)));
            row["group"] = std::string(to_string(grouping.group_of(i)));
            row["quota"] = grouping.quotas[ii];
            row["shipped"] = grouping.quantities[ii];
            rows.push_back(row);
        }
        doc["suppliers"] = rows;
        return doc.dump(2) + "\n";
    }

    std::vector<std::string> header{"Products", "S+g-c"};
    if (baseline) header.push_back("Original Grouping");
    header.insert(header.end(), {baseline ? "New Grouping" : "Group", "Transported Amount"});
    TextTable table(header);
    for (std::size_t i = 0; i < scenario.size(); ++i) {
        std::vector<std::string> row{scenario.suppliers[i].id, significant(scenario.suppliers[i].cap_margin())};
        if (baseline) row.emplace_back(to_string(baseline->group_of(i)));
        row.emplace_back(to_string(grouping.group_of(i)));
        row.push_back(format_quantity(grouping.quantities[static_cast<Eigen::Index>(i)]));
        table.add(std::move(row));
    }
    return table.str();
}

std::string render_report(const MarketScenario& scenario, const SocialUtilityReport& report,
                          OutputFormat format, const Grouping* baseline) {
    if (format == OutputFormat::machine) {
        Json doc;
        doc["capacity"] = scenario.capacity;
        if (scenario.quota_cap_fraction) doc["quota_cap_fraction"] = *scenario.quota_cap_fraction;
        doc["groups"] = grouping_json(scenario, report.grouping);
        Json rows = Json::array();
        for (std::size_t i = 0; i < scenario.size(); ++i) {
            const auto ii = static_cast<Eigen::Index>(i);
            Json row;
            row["id"] = scenario.suppliers[i].id;
            if (baseline) row["original_group"] = std::string(to_string(baseline->group_of(i)));
            row["group"] = std::string(to_string(report.grouping.group_of(i)));
            row["quota"] = report.quotas.quotas[ii];
            row["shipped"] = report.grouping.quantities[ii];
            row["pi_s_share"] = report.breakdown.per_supplier[ii];
            rows.push_back(row);
        }
        doc["suppliers"] = rows;
        doc["pi_s"] = report.pi_s;
        doc["breakdown"] = Json{{"G1", terms_json(report.breakdown.g1)},
                                {"G2", terms_json(report.breakdown.g2)},
                                {"G3", terms_json(report.breakdown.g3)}};
        return doc.dump(2) + "\n";
    }

    std::vector<std::string> header{"Products"};
    if (baseline) header.push_back("Original Grouping");
    header.insert(header.end(), {baseline ? "New Grouping" : "Group", "Minimum Quota", "Transported Amount"});
    TextTable table(header);
    for (std::size_t i = 0; i < scenario.size(); ++i) {
        const auto ii = static_cast<Eigen::Index>(i);
        std::vector<std::string> row{scenario.suppliers[i].id};
        if (baseline) row.emplace_back(to_string(baseline->group_of(i)));
        row.emplace_back(to_string(report.grouping.group_of(i)));
        row.push_back(format_quantity(report.quotas.quotas[ii]));
        row.push_back(format_quantity(report.grouping.quantities[ii]));
        table.add(std::move(row));
    }
    std::ostringstream out;
    out << table.str() << "\nPi_S = " << format_quantity(report.pi_s) << '\n';
    TextTable terms({"Group", "Market surplus", "Social value", "Total"});
    const std::array<std::pair<const char*, const GroupTerms*>, 3> groups{
        {{"G1", &report.breakdown.g1}, {"G2", &report.breakdown.g2}, {"G3", &report.breakdown.g3}}};
    for (const auto& [name, t] : groups)
        terms.add({name, format_quantity(t->market_surplus), format_quantity(t->social_value),
                   format_quantity(t->total())});
    out << '\n' << terms.str();
    return out.str();
}

std::string render_msne(const MsneInput& input, const Eigen::VectorXd& cdf, const IndifferenceCheck& check,
                        OutputFormat format) {
    if (format == OutputFormat::machine) {
        Json doc;
        doc["n"] = input.size();
        doc["ell"] = std::vector<double>(input.ell().data(), input.ell().data() + input.ell().size());
        doc["cdf"] = std::vector<double>(cdf.data(), cdf.data() + cdf.size());
        doc["residuals"] = std::vector<double>(check.residuals.data(), check.residuals.data() + check.residuals.size());
        doc["indifferent"] = check.holds;
        return doc.dump(2) + "\n";
    }
    TextTable table({"i", "ell_i", "F_i", "residual"});
    for (Eigen::Index i = 0; i < cdf.size(); ++i)
        table.add({std::to_string(i + 1), shortest(input.ell()[i]), fixed(cdf[i], 12),
                   shortest(check.residuals[i])});
    return table.str() + "\nIndifference holds: " + (check.holds ? "yes" : "no") + "\n";
}

std::string render_sweep(const SweepResult& result, OutputFormat format) {
    if (format == OutputFormat::machine) {
        Json doc;
        doc["breakpoints"] = result.breakpoints;
        Json rows = Json::array();
        for (const auto& p : result.points)
            rows.push_back(Json{{"T", p.capacity}, {"pi_s", p.pi_s}, {"regime", regime_label(p.regime)}});
        doc["points"] = rows;
        return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    for (const double b : result.breakpoints) out << "# breakpoint=" << plain(b) << '\n';
    out << "T,pi_s,regime\n";
    for (const auto& p : result.points)
        out << plain(p.capacity) << ',' << plain(p.pi_s) << ',' << regime_label(p.regime) << '\n';
    return out.str();
}

}  // namespace railcap
