// qbell: build, transform and analyze bipartite qudit Bell functionals.
//
// Subcommands: build, transform, lr-bound, qmax, scan, tightness, report,
// verify-slk. All emit deterministic JSON (fixed field order, 12 significant
// digits) or CSV; --output selects a file, default is stdout.
// Exit codes: 0 success, 1 usage/input error, 2 internal invariant failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qbell/errors.hpp"
#include "qbell/report.hpp"
#include "qbell/version.hpp"

namespace {

struct FamilyArgs {
    std::string family;
    std::string input;
    int d = 3;
    double delta = 0.25;
    double eta1 = -0.5;
    double eta2 = 0.5;
};

void add_family_flags(CLI::App* cmd, FamilyArgs& args, bool allow_input) {
    auto* fam = cmd->add_option("--family", args.family,
                                "inequality family: chsh | cglmp | slk");
    cmd->add_option("--d", args.d, "local outcome dimension")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--delta", args.delta, "SLK variant factor");
    cmd->add_option("--eta1", args.eta1, "SLK eta1 (+0.5 or -0.5)");
    cmd->add_option("--eta2", args.eta2, "SLK eta2 (+0.5 or -0.5)");
    if (allow_input) {
        auto* in = cmd->add_option("--input", args.input,
                                   "coefficient-table JSON file");
        fam->excludes(in);
    } else {
        fam->required();
    }
}

struct LoadedInequality {
    qbell::BellCoefficients coefficients;
    qbell::InequalityDescriptor descriptor;
};

LoadedInequality load_inequality(const FamilyArgs& args) {
    using namespace qbell;
    if (!args.input.empty()) {
        const std::string text = read_text_file(args.input);
        const CoefficientFile file = parse_coefficient_file(text);
        InequalityDescriptor desc;
        desc.family = "custom";
        desc.d = file.d;
        desc.source_hash = fnv1a_hex(text);
        return {to_coefficients(file), desc};
    }

    InequalityDescriptor desc;
    desc.family = args.family;
    if (args.family == "chsh") {
        desc.d = 2;
        return {build_chsh(), desc};
    }
    if (args.family == "cglmp") {
        desc.d = args.d;
        return {build_cglmp(args.d), desc};
    }
    if (args.family == "slk") {
        desc.d = args.d;
        SlkParams params{args.delta, args.eta1, args.eta2};
        desc.slk = params;
        return {build_slk(args.d, params), desc};
    }
    throw std::invalid_argument("unknown family '" + args.family +
                                "' (expected chsh, cglmp or slk)");
}

void emit(const std::string& output_path, const std::string& content) {
    if (output_path.empty() || output_path == "-")
        std::cout << content;
    else
        qbell::write_text_file(output_path, content);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for bipartite d-outcome Bell functionals"};
    app.set_version_flag("--version", std::string("qbell ") + qbell::kVersion);
    app.require_subcommand(1);

    std::string output;
    app.add_option("--output", output, "output file (default: stdout)")
        ->capture_default_str();

    // build
    FamilyArgs build_args;
    std::string build_space = "probability";
    auto* cmd_build = app.add_subcommand("build", "construct a named coefficient table");
    add_family_flags(cmd_build, build_args, false);
    cmd_build->add_option("--space", build_space,
                          "representation to store: correlation | probability");

    // transform
    std::string transform_input;
    std::string transform_space;
    auto* cmd_transform =
        app.add_subcommand("transform", "convert a table between representations");
    cmd_transform->add_option("--input", transform_input, "coefficient JSON file")
        ->required();
    cmd_transform->add_option(
        "--space", transform_space,
        "target representation (default: the other one)");

    // lr-bound
    FamilyArgs lr_args;
    double lr_tol = 1e-9;
    auto* cmd_lr = app.add_subcommand("lr-bound",
                                      "local-realistic bound by exhaustive enumeration");
    add_family_flags(cmd_lr, lr_args, true);
    cmd_lr->add_option("--tol", lr_tol, "maximizer tolerance");

    // qmax
    FamilyArgs qmax_args;
    bool qmax_optimize = false;
    std::uint64_t qmax_seed = 0;
    auto* cmd_qmax = app.add_subcommand("qmax", "largest Bell-operator eigenvalue");
    add_family_flags(cmd_qmax, qmax_args, true);
    cmd_qmax->add_flag("--optimize-phases", qmax_optimize,
                       "maximize over measurement phases (see-saw)");
    cmd_qmax->add_option("--seed", qmax_seed, "optimizer restart seed");

    // scan
    FamilyArgs scan_args;
    double gamma_min = 0.0, gamma_max = 1.5;
    int scan_steps = 1501;
    bool scan_optimize = false;
    std::uint64_t scan_seed = 0;
    auto* cmd_scan = app.add_subcommand(
        "scan", "expectation across the entanglement-parameter family (CSV)");
    add_family_flags(cmd_scan, scan_args, true);
    cmd_scan->add_option("--gamma-min", gamma_min, "grid start");
    cmd_scan->add_option("--gamma-max", gamma_max, "grid end");
    cmd_scan->add_option("--steps", scan_steps, "grid points")->check(CLI::PositiveNumber);
    cmd_scan->add_flag("--optimize-phases", scan_optimize,
                       "optimize settings for the maximally entangled state first");
    cmd_scan->add_option("--seed", scan_seed, "optimizer restart seed");

    // tightness
    FamilyArgs tight_args;
    auto* cmd_tight = app.add_subcommand("tightness",
                                         "facet test via bound-achieving generators");
    add_family_flags(cmd_tight, tight_args, true);

    // report
    FamilyArgs report_args;
    qbell::AnalysisOptions report_options;
    std::string scan_output;
    auto* cmd_report = app.add_subcommand("report", "full analysis report");
    add_family_flags(cmd_report, report_args, true);
    cmd_report->add_flag("--optimize-phases", report_options.optimize_phases,
                         "optimize settings for the maximally entangled state");
    cmd_report->add_flag("--scan", report_options.scan, "run the gamma scan");
    cmd_report->add_option("--gamma-min", report_options.gamma_min, "scan grid start");
    cmd_report->add_option("--gamma-max", report_options.gamma_max, "scan grid end");
    cmd_report->add_option("--steps", report_options.scan_steps, "scan grid points");
    cmd_report->add_option("--seed", report_options.seed, "optimizer restart seed");
    cmd_report->add_option("--tol", report_options.tol, "bound/maximizer tolerance");
    cmd_report->add_option("--scan-output", scan_output,
                           "also write the scan as CSV to this path");

    // verify-slk
    int verify_d = 3;
    double verify_delta = 0.25, verify_eta1 = -0.5, verify_eta2 = 0.5;
    int verify_trials = 500;
    std::uint64_t verify_seed = 0;
    auto* cmd_verify = app.add_subcommand(
        "verify-slk", "spectral check of the SLK operator bound d-1 over random settings");
    cmd_verify->add_option("--d", verify_d, "local outcome dimension")->check(CLI::PositiveNumber);
    cmd_verify->add_option("--delta", verify_delta, "SLK variant factor");
    cmd_verify->add_option("--eta1", verify_eta1, "SLK eta1");
    cmd_verify->add_option("--eta2", verify_eta2, "SLK eta2");
    cmd_verify->add_option("--trials", verify_trials, "random settings to test")
        ->check(CLI::PositiveNumber);
    cmd_verify->add_option("--seed", verify_seed, "trial seed");

    CLI11_PARSE(app, argc, argv);

    try {
        using namespace qbell;

        if (cmd_build->parsed()) {
            const LoadedInequality loaded = load_inequality(build_args);
            const Space space = space_from_string(build_space);
            emit(output, coefficient_file_to_json(to_file(loaded.coefficients, space)));
        } else if (cmd_transform->parsed()) {
            const CoefficientFile in = read_coefficient_file(transform_input);
            Space target = in.space == Space::Correlation ? Space::Probability
                                                          : Space::Correlation;
            if (!transform_space.empty()) target = space_from_string(transform_space);
            emit(output, coefficient_file_to_json(to_file(to_coefficients(in), target)));
        } else if (cmd_lr->parsed()) {
            const LoadedInequality loaded = load_inequality(lr_args);
            emit(output, lr_result_to_json(lr_bound(loaded.coefficients, lr_tol)));
        } else if (cmd_qmax->parsed()) {
            const LoadedInequality loaded = load_inequality(qmax_args);
            double value;
            std::string mode;
            if (qmax_optimize) {
                PhaseOptimizerOptions opts;
                opts.seed = qmax_seed;
                value = optimize_phases_eigen(loaded.coefficients, opts).value;
                mode = "optimized";
            } else {
                value = quantum_max(bell_operator(
                                        loaded.coefficients,
                                        MeasurementSettings::standard(loaded.coefficients.d())))
                            .value;
                mode = "standard";
            }
            JsonWriter w;
            w.begin_object();
            w.key("d");
            w.value(loaded.coefficients.d());
            w.key("value");
            w.value(value);
            w.key("settings_mode");
            w.value(mode);
            w.end_object();
            emit(output, w.str() + "\n");
        } else if (cmd_scan->parsed()) {
            const LoadedInequality loaded = load_inequality(scan_args);
            MeasurementSettings settings =
                MeasurementSettings::standard(loaded.coefficients.d());
            if (scan_optimize) {
                PhaseOptimizerOptions opts;
                opts.seed = scan_seed;
                settings = optimize_phases(loaded.coefficients,
                                           family_state(loaded.coefficients.d(), 1.0),
                                           opts)
                               .settings;
            }
            const auto points =
                gamma_scan(loaded.coefficients, settings,
                           uniform_grid(gamma_min, gamma_max, scan_steps));
            emit(output, scan_to_csv(points));
        } else if (cmd_tight->parsed()) {
            const LoadedInequality loaded = load_inequality(tight_args);
            emit(output, tightness_to_json(tightness(loaded.coefficients)));
        } else if (cmd_report->parsed()) {
            const LoadedInequality loaded = load_inequality(report_args);
            const AnalysisReport report =
                run_analysis(loaded.coefficients, loaded.descriptor, report_options);
            if (!scan_output.empty() && !report.scan.empty())
                write_text_file(scan_output, scan_to_csv(report.scan));
            emit(output, report_to_json(report));
        } else if (cmd_verify->parsed()) {
            const SlkParams params{verify_delta, verify_eta1, verify_eta2};
            const SlkAppendixReport rep =
                verify_slk_appendix(verify_d, params, verify_trials, verify_seed);
            emit(output, slk_appendix_to_json(rep));
        }
    } catch (const qbell::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed JSON input: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
