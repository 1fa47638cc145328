// eitcav - cavity transmission spectra for intracavity EIT.
//
// Subcommands:
//   spectrum   one config, one run: spectrum tables + lineshape reports
//   linewidth  print the FWHM per selected model, no files
//   rabi       wide-grid peak scan of the full linear model
//   compare    quantum vs semi-classical linewidth ratio over control couplings
//
// Exit codes: 0 success, 2 configuration error, 3 computation error, 4 I/O error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "eitcav/io.hpp"
#include "eitcav/quantum.hpp"

namespace {

using namespace eitcav;

struct Overrides {
    std::optional<std::int64_t> n_atoms;
    std::optional<double> omega_c;
    std::optional<std::int64_t> points;
    std::optional<double> min;
    std::optional<double> max;
    std::vector<std::string> models;
    std::optional<std::string> out;
    std::optional<std::string> format;
};

void add_override_flags(CLI::App* cmd, std::string& config_path, Overrides& o) {
    cmd->add_option("-c,--config", config_path, "JSON run configuration file");
    cmd->add_option("--n-atoms", o.n_atoms, "override params.n_atoms");
    cmd->add_option("--omega-c", o.omega_c, "override params.omega_c");
    cmd->add_option("--points", o.points, "override grid.points");
    cmd->add_option("--min", o.min, "override grid.min");
    cmd->add_option("--max", o.max, "override grid.max");
    cmd->add_option("--model", o.models,
                    "override model selection (repeatable: analytic-dark, "
                    "full-linear, semiclassical)");
    cmd->add_option("--out", o.out, "override output_path");
    cmd->add_option("--format", o.format, "override output format (csv or json)");
}

RunConfig default_config() {
    RunConfig config;
    config.params = {400, 1.0, 5.0, 1.0, 1.0, 0.0};
    config.grid = {-3.0, 3.0, 2001};
    config.models = {Model::AnalyticDark, Model::FullLinear};
    config.output_path = "eitcav_out";
    return config;
}

RunConfig load_config(const std::string& config_path, const Overrides& o) {
    RunConfig config;
    if (!config_path.empty()) {
        std::ifstream in(config_path, std::ios::binary);
        if (!in) throw io_error("cannot read config file \"" + config_path + "\"");
        std::ostringstream text;
        text << in.rdbuf();
        config = parse_config(text.str());
    } else {
        config = default_config();
    }
    if (o.n_atoms) config.params.n_atoms = *o.n_atoms;
    if (o.omega_c) config.params.omega_c = *o.omega_c;
    if (o.points) {
        if (*o.points < 2) throw config_error("--points must be >= 2");
        config.grid.points = static_cast<std::size_t>(*o.points);
    }
    if (o.min) config.grid.min = *o.min;
    if (o.max) config.grid.max = *o.max;
    if (!o.models.empty()) {
        config.models.clear();
        for (const auto& name : o.models) {
            const auto model = model_from_string(name);
            if (!model) throw config_error("unknown model \"" + name + "\"");
            config.models.push_back(*model);
        }
    }
    if (o.out) config.output_path = *o.out;
    if (o.format) {
        const auto fmt = format_from_string(*o.format);
        if (!fmt) throw config_error("unknown format \"" + *o.format + "\"");
        config.format = *fmt;
    }
    validate_params(config.params);
    validate_grid(config.grid);
    const bool wants_sc = std::find(config.models.begin(), config.models.end(),
                                    Model::Semiclassical) != config.models.end();
    if (wants_sc && !config.semiclassical)
        throw config_error("semiclassical model selected without semiclassical parameters");
    return config;
}

void print_regime(const AtomCavityParams& p) {
    const auto regime = coupling_regime(p);
    std::cout << "coupling regime: " << to_string(regime.label)
              << " (margin " << format_double(regime.margin) << ", strong-coupling factor "
              << format_double(regime.strong_factor) << ")\n";
}

int cmd_spectrum(const std::string& config_path, const Overrides& o) {
    const RunConfig config = load_config(config_path, o);
    const RunResult result = run(config);
    print_regime(config.params);
    for (const ModelRun& mr : result.runs)
        std::cout << to_string(mr.model) << ": fwhm " << format_double(mr.report.fwhm)
                  << ", " << mr.report.peak_positions.size() << " peak(s)\n";
    for (const CompareRow& row : result.compare)
        std::cout << "compare " << to_string(row.model_a) << " vs "
                  << to_string(row.model_b) << ": fwhm " << format_double(row.fwhm_a)
                  << " vs " << format_double(row.fwhm_b) << ", relative difference "
                  << format_double(row.relative_difference) << "\n";
    for (const auto& path : result.files_written)
        std::cout << "wrote " << path.string() << "\n";
    return 0;
}

int cmd_linewidth(const std::string& config_path, const Overrides& o) {
    const RunConfig config = load_config(config_path, o);
    const RunResult result = evaluate(config);
    std::cout << "analytic linewidth 2*kappa*cos^2(theta): "
              << format_double(analytic_linewidth(config.params)) << " [" << config.unit
              << " units]\n";
    for (const ModelRun& mr : result.runs)
        std::cout << to_string(mr.model) << ": fwhm " << format_double(mr.report.fwhm)
                  << "\n";
    return 0;
}

int cmd_rabi(const std::string& config_path, const Overrides& o) {
    RunConfig config = load_config(config_path, o);
    const PolaritonBasis basis = make_basis(config.params);
    if (!o.min && !o.max) {
        const double span = 1.25 * basis.collective_rabi + 5.0 * config.params.kappa;
        config.grid.min = -span;
        config.grid.max = span;
    }
    if (!o.points) config.grid.points = 20001;
    const Spectrum s = sweep(config.params, config.grid, Model::FullLinear);
    std::cout << "collective rabi sqrt(N g^2 + omega_c^2): "
              << format_double(basis.collective_rabi) << "\n";
    for (const Peak& p : find_peaks(s))
        std::cout << "peak at delta " << format_double(p.delta) << ", T "
                  << format_double(p.height) << "\n";
    return 0;
}

int cmd_compare(const std::string& config_path, const Overrides& o,
                const std::vector<double>& omega_list, double length_medium,
                double length_cavity, double reflectivity, double omega_r) {
    RunConfig config = load_config(config_path, o);
    std::cout << "omega_c,quantum_ratio,semiclassical_ratio,relative_difference\n";
    for (double omega : omega_list) {
        AtomCavityParams p = config.params;
        p.omega_c = omega;
        validate_params(p);
        const PolaritonBasis basis = make_basis(p);
        const double quantum = basis.cos_theta * basis.cos_theta;
        const SemiClassicalParams sc = consistent_semiclassical(
            p, length_medium, length_cavity, reflectivity, omega_r);
        const double semiclassical = semiclassical_linewidth(sc).ratio;
        const double rel = std::abs(quantum - semiclassical) /
                           std::max(std::abs(quantum), std::abs(semiclassical));
        std::cout << format_double(omega) << ',' << format_double(quantum) << ','
                  << format_double(semiclassical) << ',' << format_double(rel) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cavity transmission spectra for intracavity EIT"};
    app.require_subcommand(1);

    std::string config_path;
    Overrides overrides;

    auto* spectrum = app.add_subcommand("spectrum", "run one configuration");
    add_override_flags(spectrum, config_path, overrides);

    auto* linewidth = app.add_subcommand("linewidth", "print FWHM per model");
    add_override_flags(linewidth, config_path, overrides);

    auto* rabi = app.add_subcommand("rabi", "wide-grid peak scan (full linear model)");
    add_override_flags(rabi, config_path, overrides);

    auto* compare =
        app.add_subcommand("compare", "quantum vs semi-classical linewidth ratios");
    add_override_flags(compare, config_path, overrides);
    std::vector<double> omega_list{5.0, 0.5};
    double length_medium = 1.0, length_cavity = 1.0, reflectivity = 0.99, omega_r = 1.0;
    compare->add_option("--omega-list", omega_list, "control couplings to tabulate");
    compare->add_option("--length-medium", length_medium, "medium length l");
    compare->add_option("--length-cavity", length_cavity, "cavity length L");
    compare->add_option("--reflectivity", reflectivity, "mirror intensity reflectivity r");
    compare->add_option("--omega-r", omega_r, "cavity resonant frequency");

    CLI11_PARSE(app, argc, argv);

    try {
        if (spectrum->parsed()) return cmd_spectrum(config_path, overrides);
        if (linewidth->parsed()) return cmd_linewidth(config_path, overrides);
        if (rabi->parsed()) return cmd_rabi(config_path, overrides);
        return cmd_compare(config_path, overrides, omega_list, length_medium,
                           length_cavity, reflectivity, omega_r);
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const validation_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const computation_error& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return 3;
    } catch (const io_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 4;
    }
}
