#include "qbell/report.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>

#include "qbell/version.hpp"

namespace qbell {

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

AnalysisReport run_analysis(const BellCoefficients& c,
                            const InequalityDescriptor& descriptor,
                            const AnalysisOptions& options) {
    AnalysisReport report;
    report.descriptor = descriptor;
    report.version = kVersion;
    report.seed = options.seed;

    report.lr_bound = lr_bound(c, options.tol).bound;

    MeasurementSettings settings = MeasurementSettings::standard(c.d());
    if (options.optimize_phases) {
        PhaseOptimizerOptions opt;
        opt.seed = options.seed;
        // Settings that maximize the expectation of the maximally entangled
        // family state; the reference curves are defined the same way.
        settings = optimize_phases(c, family_state(c.d(), 1.0), opt).settings;
        report.settings_mode = "optimized";
    } else {
        report.settings_mode = "standard";
    }

    const BellOperator op = bell_operator(c, settings);
    report.quantum_max = quantum_max(op).value;

    if (options.scan) {
        report.scan = gamma_scan(
            c, settings,
            uniform_grid(options.gamma_min, options.gamma_max, options.scan_steps));
        const auto it = std::max_element(
            report.scan.begin(), report.scan.end(),
            [](const ScanPoint& a, const ScanPoint& b) { return a.value < b.value; });
        report.gamma_star = it->gamma;
    }

    report.p_min = noise_threshold(c, settings);
    report.tightness = tightness(c);
    return report;
}

std::string report_to_json(const AnalysisReport& report) {
    JsonWriter w;
    w.begin_object();
    w.key("family");
    w.value(report.descriptor.family);
    w.key("d");
    w.value(report.descriptor.d);
    if (report.descriptor.slk) {
        w.key("delta");
        w.value(report.descriptor.slk->delta);
        w.key("eta1");
        w.value(report.descriptor.slk->eta1);
        w.key("eta2");
        w.value(report.descriptor.slk->eta2);
    }
    if (!report.descriptor.source_hash.empty()) {
        w.key("source_hash");
        w.value(report.descriptor.source_hash);
    }
    w.key("lr_bound");
    w.value(report.lr_bound);
    w.key("quantum_max");
    w.value(report.quantum_max);
    w.key("settings_mode");
    w.value(report.settings_mode);
    if (report.gamma_star) {
        w.key("gamma_star");
        w.value(*report.gamma_star);
    }
    if (report.p_min) {
        w.key("p_min");
        w.value(*report.p_min);
    }
    w.key("tightness");
    w.begin_object();
    w.key("tight");
    w.value(report.tightness.is_tight);
    w.key("rank");
    w.value(report.tightness.rank);
    w.key("h");
    w.value(report.tightness.h);
    w.key("maximizer_count");
    w.value(report.tightness.maximizer_count);
    w.key("lr_bound");
    w.value(report.tightness.lr_bound);
    w.end_object();
    w.key("version");
    w.value(report.version);
    w.key("seed");
    w.value(static_cast<unsigned long long>(report.seed));
    w.end_object();
    return w.str() + "\n";
}

} // namespace qbell
