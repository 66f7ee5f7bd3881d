#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qbell/coefficients.hpp"
#include "qbell/json_io.hpp"
#include "qbell/polytope.hpp"
#include "qbell/quantum.hpp"

namespace qbell {

/// How the inequality under analysis was specified.
struct InequalityDescriptor {
    std::string family;             // "chsh" | "cglmp" | "slk" | "custom"
    int d = 0;
    std::optional<SlkParams> slk;   // set when family == "slk"
    std::string source_hash;        // FNV-1a of the input file when custom
};

struct AnalysisOptions {
    bool optimize_phases = false;
    bool scan = false;
    double gamma_min = 0.0;
    double gamma_max = 1.5;
    int scan_steps = 1501;
    std::uint64_t seed = 0;
    double tol = 1e-9;
};

struct AnalysisReport {
    InequalityDescriptor descriptor;
    double lr_bound = 0.0;
    double quantum_max = 0.0;
    std::string settings_mode;          // "standard" | "optimized"
    std::optional<double> gamma_star;   // argmax of the scan, when run
    std::optional<double> p_min;        // present iff the inequality is violated
    TightnessVerdict tightness;
    std::string version;
    std::uint64_t seed = 0;
    std::vector<ScanPoint> scan;        // non-empty when options.scan
};

/// Full analysis pipeline used by the CLI `report` subcommand: LR bound,
/// Bell operator at standard or phase-optimized settings, quantum maximum,
/// optional gamma scan, noise threshold, tightness. Deterministic given the
/// seed. With optimize_phases the settings maximize the expectation of the
/// maximally entangled family state, mirroring how the reference curves are
/// defined.
AnalysisReport run_analysis(const BellCoefficients& c,
                            const InequalityDescriptor& descriptor,
                            const AnalysisOptions& options);

/// Deterministic JSON rendering (fixed field order, 12 significant digits).
/// The scan itself is not embedded; it is exported separately as CSV.
std::string report_to_json(const AnalysisReport& report);

/// 64-bit FNV-1a, hex-encoded; used to fingerprint custom coefficient files.
std::string fnv1a_hex(const std::string& bytes);

} // namespace qbell
