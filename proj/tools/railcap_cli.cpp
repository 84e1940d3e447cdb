// railcap: capacity allocation, supplier grouping, equilibrium CDFs,
// minimum-quota regulation and capacity sweeps from the command line.
//
// Exit codes: 0 success, 2 parse error, 3 infeasible input,
// 4 internal invariant violation.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "railcap/allocation.hpp"
#include "railcap/equilibrium.hpp"
#include "railcap/grouping.hpp"
#include "railcap/regulator.hpp"
#include "railcap/report.hpp"
#include "railcap/scenario_io.hpp"
#include "railcap/sensitivity.hpp"

namespace {

enum ExitCode { kOk = 0, kParseError = 2, kInfeasible = 3, kInvariant = 4 };

struct GlobalFlags {
    std::string tie;
    std::optional<double> tolerance;
    std::string format = "table";
};

railcap::ScenarioFile load(const std::string& path, const GlobalFlags& flags) {
    auto file = railcap::load_scenario_file(path);
    if (!flags.tie.empty()) {
        const auto rule = railcap::parse_tie_rule(flags.tie);
        if (!rule)
            throw railcap::ParseError(railcap::ParseErrorCode::malformed_header, 0, 0,
                                      "--tie must be 'index' or 'seed:<n>'");
        file.scenario.tie_rule = *rule;
    }
    if (flags.tolerance) file.scenario.price_tolerance = *flags.tolerance;
    file.scenario.validate();
    return file;
}

railcap::OutputFormat output_format(const GlobalFlags& flags) {
    const auto format = railcap::parse_output_format(flags.format);
    if (!format)
        throw railcap::ParseError(railcap::ParseErrorCode::malformed_header, 0, 0,
                                  "--format must be 'table' or 'machine'");
    return *format;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Capacity allocation and minimum-quota regulation for capacity-constrained freight markets"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags flags;
    app.add_option("--tie", flags.tie, "Tie rule: index or seed:<n>");
    app.add_option("--tolerance", flags.tolerance, "Price comparison tolerance")->check(CLI::NonNegativeNumber);
    app.add_option("--format", flags.format, "Output format: table or machine");

    std::string scenario_path;
    std::string prices_path;
    std::string quotas_path;
    std::string ell_text;
    std::optional<double> cap;
    std::optional<std::size_t> grid;
    double from = 0.0;
    double to = 0.0;
    std::size_t steps = 10;

    auto* allocate_cmd = app.add_subcommand("allocate", "Carrier's capacity allocation for offered prices");
    allocate_cmd->add_option("scenario", scenario_path, "Scenario file")->required();
    allocate_cmd->add_option("--prices", prices_path, "File of 'id,price' lines")->required();

    auto* group_cmd = app.add_subcommand("group", "Supplier groups G1/G2/G3 and shipped amounts");
    group_cmd->add_option("scenario", scenario_path, "Scenario file")->required();
    group_cmd->add_option("--quotas", quotas_path, "File of 'id,quota' lines");

    auto* equilibrium_cmd = app.add_subcommand("equilibrium", "Mixed-strategy equilibrium CDF values");
    equilibrium_cmd->add_option("--ell", ell_text, "Comma-separated ratios ell_i in (0, 1]")->required();

    auto* regulate_cmd = app.add_subcommand("regulate", "Socially optimal minimum quotas");
    regulate_cmd->add_option("scenario", scenario_path, "Scenario file")->required();
    regulate_cmd->add_option("--cap", cap, "Quota cap as a fraction of production")->check(CLI::Range(0.0, 1.0));
    regulate_cmd->add_option("--grid", grid, "Grid points per supplier axis")->check(CLI::Range(2, 1000000));

    auto* sweep_cmd = app.add_subcommand("sweep", "Optimal objective across transportation capacities");
    sweep_cmd->add_option("scenario", scenario_path, "Scenario file")->required();
    sweep_cmd->add_option("--from", from, "First capacity")->required()->check(CLI::NonNegativeNumber);
    sweep_cmd->add_option("--to", to, "Last capacity")->required()->check(CLI::NonNegativeNumber);
    sweep_cmd->add_option("--steps", steps, "Number of intervals")->required();
    sweep_cmd->add_option("--grid", grid, "Grid points per supplier axis")->check(CLI::Range(2, 1000000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParseError;
    }

    try {
        const auto format = output_format(flags);
        if (*allocate_cmd) {
            const auto file = load(scenario_path, flags);
            const auto prices = railcap::parse_price_file(railcap::read_text_file(prices_path), file.scenario);
            const auto allocation = railcap::allocate(file.scenario, prices);
            std::cout << railcap::render_allocation(file.scenario, prices, allocation, format);
        } else if (*group_cmd) {
            const auto file = load(scenario_path, flags);
            if (quotas_path.empty()) {
                std::cout << railcap::render_grouping(file.scenario, railcap::group_suppliers(file.scenario), format);
            } else {
                const auto quotas = railcap::parse_quota_file(railcap::read_text_file(quotas_path), file.scenario);
                const auto baseline = railcap::group_suppliers(file.scenario);
                const auto adjusted = railcap::group_suppliers_adjusted(file.scenario, quotas);
                std::cout << railcap::render_grouping(file.scenario, adjusted, format, &baseline);
            }
        } else if (*equilibrium_cmd) {
            const auto values = railcap::parse_number_list(ell_text);
            const railcap::MsneInput input(Eigen::Map<const Eigen::VectorXd>(
                values.data(), static_cast<Eigen::Index>(values.size())));
            const double tolerance = flags.tolerance.value_or(1e-12);
            const auto cdf = railcap::msne_cdf_values(input, tolerance);
            const auto check = railcap::verify_indifference(input, cdf, tolerance);
            std::cout << railcap::render_msne(input, cdf, check, format);
        } else if (*regulate_cmd) {
            auto file = load(scenario_path, flags);
            if (cap) file.scenario.quota_cap_fraction = *cap;
            file.scenario.validate();
            const railcap::SummOptions options{grid.value_or(file.grid_points), false};
            const auto baseline = railcap::group_suppliers(file.scenario);
            const auto report = railcap::solve_summ(file.scenario, options);
            if (format == railcap::OutputFormat::table) {
                std::cout << "Quota candidates:";
                const auto eligible = railcap::quota_eligible(file.scenario, baseline);
                if (eligible.empty()) std::cout << " none";
                for (const std::size_t i : eligible) std::cout << ' ' << file.scenario.suppliers[i].id;
                std::cout << "\n\n";
            }
            std::cout << railcap::render_report(file.scenario, report, format, &baseline);
        } else if (*sweep_cmd) {
            const auto file = load(scenario_path, flags);
            const railcap::SummOptions options{grid.value_or(file.grid_points), false};
            const auto result = railcap::sweep(file.scenario, railcap::linspace(from, to, steps), options);
            std::cout << railcap::render_sweep(result, format);
        }
    } catch (const railcap::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const railcap::DomainError& e) {
        std::cerr << "infeasible input: " << e.what() << '\n';
        return kInfeasible;
    } catch (const railcap::InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInvariant;
    }
    return kOk;
}
