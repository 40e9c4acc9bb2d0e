#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "hsx/stability.hpp"

namespace hsx {

// Malformed input (file missing, JSON syntax, schema violation): exit code 3.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// A mathematical invariant failed while running: exit code 2.
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class RunMode { event, picard, both };

struct Scenario {
    std::string name;
    std::optional<EulerianState> eulerian0;    // exactly one of the two is set
    std::optional<LagrangianState> lagrangian0;
    AlphaFunction alpha;
    std::vector<double> times;                 // nonnegative, sorted
    RunMode mode = RunMode::event;
    std::vector<std::string> outputs;  // subset of {states, eventlog, metrics,
                                       //            residuals, roundtrip}
    PicardConfig picard;
    double tol = 1e-10;
    bool allow_invalid_alpha = false;
};

// Parses and validates a scenario; throws InputError whose message carries the
// JSON pointer path of the offending field.
Scenario load_scenario(const std::string& path);
Scenario parse_scenario(const std::string& json_text);

struct RoundTripDiagnostic {
    bool computed = false;
    double sup_y = 0.0, sup_U = 0.0, sup_H = 0.0, sup_V = 0.0;  // |LM - Pi| at t_max
};

struct RunResult {
    Scenario scenario;
    LagrangianState X0;          // Lagrangian initial data (after L if needed)
    Trajectory traj;             // event-driven trajectory over [0, max(times)]
    std::vector<LagrangianState> lagrangian;  // per requested time
    std::vector<EulerianState> eulerian;      // M-images per requested time
    std::optional<PicardIterate> picard;
    std::vector<double> picard_vs_event;      // sup node deviation per time
    std::vector<WeakResidual> residuals;      // one per built-in test function
    RoundTripDiagnostic roundtrip;
    std::vector<LipReportEntry> metric_growth;  // optional (t, dtilde, bound)
};

RunResult run_scenario(const Scenario& s);

// Writes the artifacts requested by s.outputs into outdir (created if absent).
// File set: <name>_lagrangian.csv, <name>_eulerian.csv, <name>_states.json,
// <name>_events.json, <name>_metrics.json, <name>_residuals.json,
// <name>_roundtrip.json.  All floats at 17 significant digits; rerunning a
// scenario produces byte-identical files.
void write_artifacts(const RunResult& res, const std::string& outdir);

// Long-form CSV for plotting; kind in {profile, cdf, characteristics,
// metric_growth}.  Throws InputError on unknown kind.
void export_plot_data(const RunResult& res, const std::string& kind,
                      const std::string& path);

// Built-in golden scenarios, name in {a1, a2, a3, a4, intro, zero}.
Scenario builtin_example(const std::string& name);

// Full pipelines used by the CLI; return the process exit code (0 / 2 / 3).
int cli_run(const std::string& scenario_file, const std::string& outdir,
            std::optional<RunMode> mode_override, std::optional<double> tol_override,
            bool allow_invalid_alpha);
// Output directory resolution: HSX2_OUT env var wins over the --out flag;
// default ".".
std::string resolve_outdir(const std::string& flag_value);

}  // namespace hsx
