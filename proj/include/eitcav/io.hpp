// io.hpp - run configuration, orchestration and serialization.
//
// Configuration is a single JSON document; unknown keys are rejected with the
// offending key named. Spectra serialize to CSV (header
// "delta,transmission,model") or JSON, numbers at full round-trip precision,
// so reruns of identical configs produce byte-identical files.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "eitcav/lineshape.hpp"
#include "eitcav/semiclassical.hpp"
#include "eitcav/spectrum.hpp"

namespace eitcav {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, Json };

std::string_view to_string(OutputFormat f);
std::optional<OutputFormat> format_from_string(std::string_view name);

struct RunConfig {
    AtomCavityParams params;
    DetuningGrid grid;
    std::vector<Model> models;                           // at least one
    std::optional<SemiClassicalParams> semiclassical;    // iff Semiclassical selected
    std::string output_path;                             // stem for emitted files
    OutputFormat format = OutputFormat::Csv;
    std::string unit = "kappa";                          // declared rate unit
};

// Parses and validates a JSON configuration document. Throws config_error
// naming the offending key on unknown keys, missing keys, type mismatches and
// invariant violations.
RunConfig parse_config(const std::string& text);

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

std::string spectrum_to_csv(const Spectrum& s);
std::string spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const std::string& text);

// Writes one spectrum file. I/O failures throw io_error.
void emit_spectrum(const Spectrum& s, OutputFormat format,
                   const std::filesystem::path& path);

struct ModelRun {
    Model model = Model::AnalyticDark;
    Spectrum spectrum;
    LineshapeReport report;
};

struct CompareRow {
    Model model_a = Model::AnalyticDark;
    Model model_b = Model::AnalyticDark;
    double fwhm_a = 0.0;
    double fwhm_b = 0.0;
    double relative_difference = 0.0;  // |a - b| / max(|a|, |b|)
};

struct RunResult {
    std::vector<ModelRun> runs;
    std::vector<CompareRow> compare;
    std::vector<std::filesystem::path> files_written;
};

// Computes every selected model over the grid and returns spectra, reports
// and the pairwise FWHM comparison without touching the filesystem.
RunResult evaluate(const RunConfig& config);

// evaluate() plus artifact files: one spectrum table per model
// (<output_path>.<model>.<ext>) and one report document
// (<output_path>.report.json) with the per-model lineshape reports and the
// compare rows. All outputs are composed and all destinations opened before
// anything is written, so a failing path leaves no partial files behind.
RunResult run(const RunConfig& config);

// Transmission spectrum implied by the semi-classical linewidth: a Lorentzian
// of FWHM ratio * 2 kappa centered at Delta = 0.
Spectrum semiclassical_spectrum(const AtomCavityParams& p,
                                const SemiClassicalParams& sc,
                                const DetuningGrid& grid);

}  // namespace eitcav
