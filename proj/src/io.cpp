#include "eitcav/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <utility>

#include <json.hpp>

#include "eitcav/quantum.hpp"

namespace eitcav {

using nlohmann::json;

std::string_view to_string(Model m) {
    switch (m) {
        case Model::AnalyticDark: return "analytic-dark";
        case Model::FullLinear: return "full-linear";
        case Model::Semiclassical: return "semiclassical";
    }
    return "unknown";
}

std::optional<Model> model_from_string(std::string_view name) {
    if (name == "analytic-dark") return Model::AnalyticDark;
    if (name == "full-linear") return Model::FullLinear;
    if (name == "semiclassical") return Model::Semiclassical;
    return std::nullopt;
}

std::string_view to_string(OutputFormat f) {
    return f == OutputFormat::Csv ? "csv" : "json";
}

std::optional<OutputFormat> format_from_string(std::string_view name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    return std::nullopt;
}

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items())
        if (!known.contains(key))
            throw config_error("unknown key \"" + key + "\" in " + where);
}

double require_number(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key))
        throw config_error("missing required key \"" + key + "\" in " + where);
    if (!obj[key].is_number())
        throw config_error("key \"" + key + "\" in " + where + " must be a number");
    return obj[key].get<double>();
}

std::int64_t require_integer(const json& obj, const std::string& key,
                             const std::string& where) {
    if (!obj.contains(key))
        throw config_error("missing required key \"" + key + "\" in " + where);
    if (!obj[key].is_number_integer())
        throw config_error("key \"" + key + "\" in " + where + " must be an integer");
    return obj[key].get<std::int64_t>();
}

double optional_number(const json& obj, const std::string& key, const std::string& where,
                       double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number())
        throw config_error("key \"" + key + "\" in " + where + " must be a number");
    return obj[key].get<double>();
}

AtomCavityParams parse_atom_cavity(const json& obj) {
    if (!obj.is_object()) throw config_error("\"params\" must be an object");
    reject_unknown_keys(obj, {"n_atoms", "g", "omega_c", "kappa", "gamma_e", "gamma_s"},
                        "params");
    AtomCavityParams p;
    p.n_atoms = require_integer(obj, "n_atoms", "params");
    p.g = require_number(obj, "g", "params");
    p.omega_c = require_number(obj, "omega_c", "params");
    p.kappa = require_number(obj, "kappa", "params");
    p.gamma_e = require_number(obj, "gamma_e", "params");
    p.gamma_s = optional_number(obj, "gamma_s", "params", 0.0);
    try {
        return validate_params(p);
    } catch (const validation_error& e) {
        throw config_error("params: " + std::string(e.what()));
    }
}

DetuningGrid parse_grid(const json& obj) {
    if (!obj.is_object()) throw config_error("\"grid\" must be an object");
    reject_unknown_keys(obj, {"min", "max", "points"}, "grid");
    DetuningGrid g;
    g.min = require_number(obj, "min", "grid");
    g.max = require_number(obj, "max", "grid");
    const std::int64_t points = require_integer(obj, "points", "grid");
    if (points < 0) throw config_error("grid: points must be positive");
    g.points = static_cast<std::size_t>(points);
    try {
        return validate_grid(g);
    } catch (const validation_error& e) {
        throw config_error("grid: " + std::string(e.what()));
    }
}

SemiClassicalParams parse_semiclassical(const json& obj) {
    if (!obj.is_object()) throw config_error("\"semiclassical\" must be an object");
    reject_unknown_keys(obj,
                        {"length_medium", "length_cavity", "reflectivity", "omega_r",
                         "chi_prefactor", "gamma_e", "gamma_s", "omega_c",
                         "probe_frequency", "c_light"},
                        "semiclassical");
    SemiClassicalParams p;
    p.length_medium = require_number(obj, "length_medium", "semiclassical");
    p.length_cavity = require_number(obj, "length_cavity", "semiclassical");
    p.reflectivity = require_number(obj, "reflectivity", "semiclassical");
    p.omega_r = require_number(obj, "omega_r", "semiclassical");
    p.chi_prefactor = require_number(obj, "chi_prefactor", "semiclassical");
    p.gamma_e = require_number(obj, "gamma_e", "semiclassical");
    p.gamma_s = optional_number(obj, "gamma_s", "semiclassical", 0.0);
    p.omega_c = require_number(obj, "omega_c", "semiclassical");
    p.probe_frequency = require_number(obj, "probe_frequency", "semiclassical");
    p.c_light = optional_number(obj, "c_light", "semiclassical", 1.0);
    try {
        return validate_params(p);
    } catch (const validation_error& e) {
        throw config_error("semiclassical: " + std::string(e.what()));
    }
}

json params_to_json(const AtomCavityParams& p) {
    return {{"n_atoms", p.n_atoms}, {"g", p.g},           {"omega_c", p.omega_c},
            {"kappa", p.kappa},     {"gamma_e", p.gamma_e}, {"gamma_s", p.gamma_s}};
}

json report_to_json(const LineshapeReport& r) {
    return {{"peak_positions", r.peak_positions},
            {"peak_heights", r.peak_heights},
            {"fwhm", r.fwhm},
            {"fit_center", r.fit_center},
            {"fit_width", r.fit_width},
            {"fit_amplitude", r.fit_amplitude},
            {"fit_residual", r.fit_residual}};
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw config_error(std::string("configuration is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw config_error("configuration root must be a JSON object");
    reject_unknown_keys(
        doc, {"params", "grid", "models", "semiclassical", "output_path", "format", "unit"},
        "configuration");

    RunConfig config;
    if (!doc.contains("params")) throw config_error("missing required key \"params\"");
    config.params = parse_atom_cavity(doc["params"]);
    if (!doc.contains("grid")) throw config_error("missing required key \"grid\"");
    config.grid = parse_grid(doc["grid"]);

    if (!doc.contains("models") || !doc["models"].is_array() || doc["models"].empty())
        throw config_error("\"models\" must be a non-empty array of model names");
    for (const auto& entry : doc["models"]) {
        if (!entry.is_string())
            throw config_error("\"models\" entries must be strings");
        const auto model = model_from_string(entry.get<std::string>());
        if (!model)
            throw config_error("unknown model \"" + entry.get<std::string>() +
                               "\" (expected analytic-dark, full-linear or semiclassical)");
        if (std::find(config.models.begin(), config.models.end(), *model) ==
            config.models.end())
            config.models.push_back(*model);
    }

    const bool wants_semiclassical =
        std::find(config.models.begin(), config.models.end(), Model::Semiclassical) !=
        config.models.end();
    if (doc.contains("semiclassical")) {
        if (!wants_semiclassical)
            throw config_error(
                "\"semiclassical\" parameters given but the semiclassical model is not "
                "selected");
        config.semiclassical = parse_semiclassical(doc["semiclassical"]);
    } else if (wants_semiclassical) {
        throw config_error(
            "the semiclassical model is selected but \"semiclassical\" parameters are "
            "missing");
    }

    if (!doc.contains("output_path") || !doc["output_path"].is_string())
        throw config_error("missing required string key \"output_path\"");
    config.output_path = doc["output_path"].get<std::string>();

    if (doc.contains("format")) {
        if (!doc["format"].is_string())
            throw config_error("key \"format\" must be a string");
        const auto fmt = format_from_string(doc["format"].get<std::string>());
        if (!fmt)
            throw config_error("unknown format \"" + doc["format"].get<std::string>() +
                               "\" (expected csv or json)");
        config.format = *fmt;
    }
    if (doc.contains("unit")) {
        if (!doc["unit"].is_string()) throw config_error("key \"unit\" must be a string");
        config.unit = doc["unit"].get<std::string>();
    }
    return config;
}

std::string spectrum_to_csv(const Spectrum& s) {
    std::string out = "delta,transmission,model\n";
    const std::string model(to_string(s.model));
    for (std::size_t i = 0; i < s.detunings.size(); ++i) {
        out += format_double(s.detunings[i]);
        out += ',';
        out += format_double(s.transmission[i]);
        out += ',';
        out += model;
        out += '\n';
    }
    return out;
}

std::string spectrum_to_json(const Spectrum& s) {
    const json doc = {{"detunings", s.detunings},
                      {"transmission", s.transmission},
                      {"model", std::string(to_string(s.model))},
                      {"params_snapshot", params_to_json(s.params_snapshot)}};
    return doc.dump(2) + "\n";
}

Spectrum spectrum_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw config_error(std::string("spectrum document is not valid JSON: ") + e.what());
    }
    Spectrum s;
    s.detunings = doc.at("detunings").get<std::vector<double>>();
    s.transmission = doc.at("transmission").get<std::vector<double>>();
    const auto model = model_from_string(doc.at("model").get<std::string>());
    if (!model) throw config_error("spectrum document carries an unknown model tag");
    s.model = *model;
    const json& p = doc.at("params_snapshot");
    s.params_snapshot.n_atoms = p.at("n_atoms").get<std::int64_t>();
    s.params_snapshot.g = p.at("g").get<double>();
    s.params_snapshot.omega_c = p.at("omega_c").get<double>();
    s.params_snapshot.kappa = p.at("kappa").get<double>();
    s.params_snapshot.gamma_e = p.at("gamma_e").get<double>();
    s.params_snapshot.gamma_s = p.at("gamma_s").get<double>();
    return s;
}

void emit_spectrum(const Spectrum& s, OutputFormat format,
                   const std::filesystem::path& path) {
    const std::string content =
        format == OutputFormat::Csv ? spectrum_to_csv(s) : spectrum_to_json(s);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open \"" + path.string() + "\" for writing");
    out << content;
    out.close();
    if (!out) throw io_error("write to \"" + path.string() + "\" failed");
}

Spectrum semiclassical_spectrum(const AtomCavityParams& p, const SemiClassicalParams& sc,
                                const DetuningGrid& grid) {
    validate_params(p);
    validate_grid(grid);
    const double ratio = semiclassical_linewidth(sc).ratio;
    // FWHM = ratio * 2 kappa, so the Lorentzian half width is ratio * kappa.
    const double w = ratio * p.kappa;
    Spectrum s;
    s.model = Model::Semiclassical;
    s.params_snapshot = p;
    s.detunings = grid.values();
    s.transmission.reserve(grid.points);
    for (double delta : s.detunings)
        s.transmission.push_back(w * w / (w * w + delta * delta));
    return s;
}

RunResult evaluate(const RunConfig& config) {
    RunResult result;
    for (Model model : config.models) {
        ModelRun run;
        run.model = model;
        if (model == Model::Semiclassical) {
            if (!config.semiclassical)
                throw config_error("semiclassical model selected without parameters");
            run.spectrum =
                semiclassical_spectrum(config.params, *config.semiclassical, config.grid);
        } else {
            run.spectrum = sweep(config.params, config.grid, model);
        }
        run.report = analyze(run.spectrum);
        result.runs.push_back(std::move(run));
    }
    for (std::size_t a = 0; a < result.runs.size(); ++a) {
        for (std::size_t b = a + 1; b < result.runs.size(); ++b) {
            CompareRow row;
            row.model_a = result.runs[a].model;
            row.model_b = result.runs[b].model;
            row.fwhm_a = result.runs[a].report.fwhm;
            row.fwhm_b = result.runs[b].report.fwhm;
            row.relative_difference = std::abs(row.fwhm_a - row.fwhm_b) /
                                      std::max(std::abs(row.fwhm_a), std::abs(row.fwhm_b));
            result.compare.push_back(row);
        }
    }
    return result;
}

RunResult run(const RunConfig& config) {
    RunResult result = evaluate(config);

    const char* ext = config.format == OutputFormat::Csv ? ".csv" : ".json";
    std::vector<std::pair<std::filesystem::path, std::string>> outputs;
    for (const ModelRun& mr : result.runs) {
        const std::string content = config.format == OutputFormat::Csv
                                        ? spectrum_to_csv(mr.spectrum)
                                        : spectrum_to_json(mr.spectrum);
        outputs.emplace_back(config.output_path + "." +
                                 std::string(to_string(mr.model)) + ext,
                             content);
    }

    json report = {{"unit", config.unit},
                   {"params", params_to_json(config.params)},
                   {"grid",
                    {{"min", config.grid.min},
                     {"max", config.grid.max},
                     {"points", config.grid.points}}}};
    for (const ModelRun& mr : result.runs)
        report["models"][std::string(to_string(mr.model))] = report_to_json(mr.report);
    report["compare"] = json::array();
    for (const CompareRow& row : result.compare)
        report["compare"].push_back({{"model_a", std::string(to_string(row.model_a))},
                                     {"model_b", std::string(to_string(row.model_b))},
                                     {"fwhm_a", row.fwhm_a},
                                     {"fwhm_b", row.fwhm_b},
                                     {"relative_difference", row.relative_difference}});
    outputs.emplace_back(config.output_path + ".report.json", report.dump(2) + "\n");

    // Open every destination before writing any content, so a bad output path
    // cannot leave a partial file set behind.
    std::vector<std::ofstream> streams;
    std::vector<std::filesystem::path> created;
    auto cleanup = [&] {
        streams.clear();
        std::error_code ec;
        for (const auto& path : created) std::filesystem::remove(path, ec);
    };
    for (const auto& [path, content] : outputs) {
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            cleanup();
            throw io_error("cannot open \"" + path.string() + "\" for writing");
        }
        created.push_back(path);
        streams.push_back(std::move(out));
    }
    for (std::size_t i = 0; i < outputs.size(); ++i) {
        streams[i] << outputs[i].second;
        streams[i].close();
        if (!streams[i]) {
            cleanup();
            throw io_error("write to \"" + outputs[i].first.string() + "\" failed");
        }
        result.files_written.push_back(outputs[i].first);
    }
    return result;
}

}  // namespace eitcav
