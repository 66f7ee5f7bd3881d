#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qbell/coefficients.hpp"
#include "qbell/local_realism.hpp"
#include "qbell/polytope.hpp"
#include "qbell/quantum.hpp"
#include "qbell/version.hpp"

namespace py = pybind11;
using namespace qbell;

PYBIND11_MODULE(_qbell, m) {
    m.doc() = "Bipartite d-outcome Bell functionals: dual coefficient tables, "
              "local-realistic bounds, Bell-operator spectra, noise thresholds "
              "and polytope tightness.";
    m.attr("__version__") = kVersion;

    py::class_<SlkParams>(m, "SlkParams")
        .def(py::init([](double delta, double eta1, double eta2) {
                 return SlkParams{delta, eta1, eta2};
             }),
             py::arg("delta") = 0.25, py::arg("eta1") = -0.5, py::arg("eta2") = 0.5)
        .def_readwrite("delta", &SlkParams::delta)
        .def_readwrite("eta1", &SlkParams::eta1)
        .def_readwrite("eta2", &SlkParams::eta2)
        .def("normalized_delta", &SlkParams::normalized_delta)
        .def("__repr__", [](const SlkParams& p) {
            return "SlkParams(delta=" + std::to_string(p.delta) +
                   ", eta1=" + std::to_string(p.eta1) +
                   ", eta2=" + std::to_string(p.eta2) + ")";
        });

    py::class_<BellCoefficients>(m, "BellCoefficients")
        .def_static("from_correlation", &BellCoefficients::from_correlation,
                    py::arg("d"), py::arg("f"))
        .def_static("from_probability", &BellCoefficients::from_probability,
                    py::arg("d"), py::arg("epsilon"))
        .def_property_readonly("d", &BellCoefficients::d)
        .def("f", &BellCoefficients::f, py::arg("a"), py::arg("b"), py::arg("n"))
        .def("epsilon", &BellCoefficients::epsilon, py::arg("a"), py::arg("b"),
             py::arg("alpha"))
        .def("f_table", &BellCoefficients::f_table)
        .def("epsilon_table", &BellCoefficients::epsilon_table)
        .def("max_imag_epsilon", &BellCoefficients::max_imag_epsilon)
        .def("is_real", &BellCoefficients::is_real, py::arg("tol") = 1e-9)
        .def("zeroth_order_sum", &BellCoefficients::zeroth_order_sum)
        .def("dual_consistency_error", &BellCoefficients::dual_consistency_error)
        .def("__repr__", [](const BellCoefficients& c) {
            return "BellCoefficients(d=" + std::to_string(c.d()) + ")";
        });

    m.def("fourier_to_probability", &fourier_to_probability, py::arg("f"),
          py::arg("d"), "epsilon[a,b,alpha] = sum_n f[a,b,n] omega^(n alpha)");
    m.def("fourier_to_correlation", &fourier_to_correlation, py::arg("epsilon"),
          py::arg("d"), "f[a,b,n] = (1/d) sum_a epsilon[a,b,alpha] omega^(-n alpha)");
    m.def("build_chsh", &build_chsh);
    m.def("build_cglmp", &build_cglmp, py::arg("d"));
    m.def("build_slk", &build_slk, py::arg("d"), py::arg("params") = SlkParams{});
    m.def("slk_kernel", &slk_kernel, py::arg("x"), py::arg("d"));

    py::class_<CorrelationWeight>(m, "CorrelationWeight")
        .def(py::init([](int d, std::vector<cplx> mu) {
                 return CorrelationWeight{d, std::move(mu)};
             }),
             py::arg("d"), py::arg("mu"))
        .def_readonly("d", &CorrelationWeight::d)
        .def_readonly("mu", &CorrelationWeight::mu);
    py::class_<WeightConditionReport>(m, "WeightConditionReport")
        .def_readonly("c1", &WeightConditionReport::c1)
        .def_readonly("c2", &WeightConditionReport::c2)
        .def_readonly("c3", &WeightConditionReport::c3)
        .def("all", &WeightConditionReport::all)
        .def("__repr__", [](const WeightConditionReport& r) {
            auto flag = [](bool b) { return b ? "pass" : "fail"; };
            return std::string("WeightConditionReport(c1=") + flag(r.c1) +
                   ", c2=" + flag(r.c2) + ", c3=" + flag(r.c3) + ")";
        });
    m.def("fourier_weight", &fourier_weight, py::arg("d"), py::arg("n"));
    m.def("validate_weight", &validate_weight, py::arg("weight"),
          py::arg("tol") = 1e-12);

    py::class_<DeterministicStrategy>(m, "DeterministicStrategy")
        .def(py::init([](int a1, int a2, int b1, int b2) {
                 return DeterministicStrategy{a1, a2, b1, b2};
             }),
             py::arg("a1"), py::arg("a2"), py::arg("b1"), py::arg("b2"))
        .def_readwrite("a1", &DeterministicStrategy::a1)
        .def_readwrite("a2", &DeterministicStrategy::a2)
        .def_readwrite("b1", &DeterministicStrategy::b1)
        .def_readwrite("b2", &DeterministicStrategy::b2)
        .def("__eq__", [](const DeterministicStrategy& a,
                          const DeterministicStrategy& b) { return a == b; })
        .def("__repr__", [](const DeterministicStrategy& s) {
            return "DeterministicStrategy(" + std::to_string(s.a1) + ", " +
                   std::to_string(s.a2) + ", " + std::to_string(s.b1) + ", " +
                   std::to_string(s.b2) + ")";
        });
    m.def("strategy_residues", &strategy_residues, py::arg("strategy"), py::arg("d"),
          "(alpha_11, alpha_12, alpha_21, alpha_22)");
    m.def("enumerate_strategies", &enumerate_strategies, py::arg("d"));
    m.def("strategy_value", &strategy_value, py::arg("strategy"),
          py::arg("coefficients"));

    py::class_<LrBoundResult>(m, "LrBoundResult")
        .def_readonly("bound", &LrBoundResult::bound)
        .def_readonly("maximizers", &LrBoundResult::maximizers)
        .def_readonly("tolerance", &LrBoundResult::tolerance)
        .def("__repr__", [](const LrBoundResult& r) {
            return "LrBoundResult(bound=" + std::to_string(r.bound) +
                   ", maximizers=" + std::to_string(r.maximizers.size()) + ")";
        });
    m.def("lr_bound", &lr_bound, py::arg("coefficients"), py::arg("tol") = 1e-9);
    m.def("optimal_slk_bound_closed_form", &optimal_slk_bound_closed_form,
          py::arg("d"));

    py::class_<MeasurementSettings>(m, "MeasurementSettings")
        .def(py::init<int, std::array<std::vector<double>, 2>,
                      std::array<std::vector<double>, 2>>(),
             py::arg("d"), py::arg("alice_phases"), py::arg("bob_phases"))
        .def_static("standard", &MeasurementSettings::standard, py::arg("d"))
        .def_property_readonly("d", &MeasurementSettings::d)
        .def("alice_phases", &MeasurementSettings::alice_phases, py::arg("setting"))
        .def("bob_phases", &MeasurementSettings::bob_phases, py::arg("setting"))
        .def("alice_basis", &MeasurementSettings::alice_basis, py::arg("setting"))
        .def("bob_basis", &MeasurementSettings::bob_basis, py::arg("setting"));

    py::class_<BellOperator>(m, "BellOperator")
        .def_readonly("d", &BellOperator::d)
        .def_readonly("matrix", &BellOperator::matrix);
    m.def("bell_operator", &bell_operator, py::arg("coefficients"),
          py::arg("settings"));
    m.def("correlation_operator", &correlation_operator, py::arg("settings"),
          py::arg("a"), py::arg("b"), py::arg("n"));
    m.def("expectation", &expectation, py::arg("operator"), py::arg("psi"));

    py::class_<QuantumMax>(m, "QuantumMax")
        .def_readonly("value", &QuantumMax::value)
        .def_readonly("state", &QuantumMax::state);
    m.def("quantum_max", &quantum_max, py::arg("operator"),
          "largest eigenvalue and eigenvector of the Bell operator");
    m.def("family_state", &family_state, py::arg("d"), py::arg("gamma"));
    m.def(
        "gamma_scan",
        [](const BellCoefficients& c, const MeasurementSettings& s,
           const std::vector<double>& grid) {
            std::vector<std::pair<double, double>> out;
            for (const ScanPoint& p : gamma_scan(c, s, grid))
                out.emplace_back(p.gamma, p.value);
            return out;
        },
        py::arg("coefficients"), py::arg("settings"), py::arg("gamma_grid"),
        "list of (gamma, expectation) pairs");
    m.def("uniform_grid", &uniform_grid, py::arg("lo"), py::arg("hi"),
          py::arg("steps"));

    py::class_<PhaseOptimizerOptions>(m, "PhaseOptimizerOptions")
        .def(py::init<>())
        .def_readwrite("restarts", &PhaseOptimizerOptions::restarts)
        .def_readwrite("max_sweeps", &PhaseOptimizerOptions::max_sweeps)
        .def_readwrite("max_seesaw_rounds", &PhaseOptimizerOptions::max_seesaw_rounds)
        .def_readwrite("sweep_tol", &PhaseOptimizerOptions::sweep_tol)
        .def_readwrite("seed", &PhaseOptimizerOptions::seed);
    py::class_<PhaseOptimizationResult>(m, "PhaseOptimizationResult")
        .def_readonly("settings", &PhaseOptimizationResult::settings)
        .def_readonly("value", &PhaseOptimizationResult::value);
    m.def("optimize_phases", &optimize_phases, py::arg("coefficients"),
          py::arg("psi"), py::arg("options") = PhaseOptimizerOptions{},
          "coordinate-descent phase search for a fixed state");
    m.def("optimize_phases_eigen", &optimize_phases_eigen, py::arg("coefficients"),
          py::arg("options") = PhaseOptimizerOptions{},
          "see-saw phase search maximizing the top eigenvalue");
    m.def("noise_threshold", &noise_threshold, py::arg("coefficients"),
          py::arg("settings"),
          "minimal pure-state weight of a white-noise mixture that still "
          "violates the inequality, or None");

    py::class_<SlkAppendixReport>(m, "SlkAppendixReport")
        .def_readonly("d", &SlkAppendixReport::d)
        .def_readonly("params", &SlkAppendixReport::params)
        .def_readonly("trials", &SlkAppendixReport::trials)
        .def_readonly("seed", &SlkAppendixReport::seed)
        .def_readonly("max_observed", &SlkAppendixReport::max_observed)
        .def_readonly("bound", &SlkAppendixReport::bound)
        .def_readonly("pass_", &SlkAppendixReport::pass);
    m.def("verify_slk_appendix", &verify_slk_appendix, py::arg("d"),
          py::arg("params"), py::arg("trials") = 500, py::arg("seed") = 0,
          "spectral check of the SLK operator bound d-1 over random settings");

    py::class_<PolytopeGenerator>(m, "PolytopeGenerator")
        .def_readonly("strategy", &PolytopeGenerator::strategy)
        .def_readonly("vec", &PolytopeGenerator::vec);
    m.def("generator", &generator, py::arg("strategy"), py::arg("d"));
    m.def("generator_rank", &generator_rank, py::arg("generators"));
    m.def("condition_t1", &condition_t1, py::arg("coefficients"));

    py::class_<TightnessVerdict>(m, "TightnessVerdict")
        .def_readonly("is_tight", &TightnessVerdict::is_tight)
        .def_readonly("rank", &TightnessVerdict::rank)
        .def_readonly("h", &TightnessVerdict::h)
        .def_readonly("maximizer_count", &TightnessVerdict::maximizer_count)
        .def_readonly("lr_bound", &TightnessVerdict::lr_bound)
        .def("__repr__", [](const TightnessVerdict& v) {
            return std::string("TightnessVerdict(tight=") +
                   (v.is_tight ? "True" : "False") + ", rank=" +
                   std::to_string(v.rank) + ", h=" + std::to_string(v.h) + ")";
        });
    m.def("tightness", &tightness, py::arg("coefficients"));
    m.def("slk_maximizer_families", &slk_maximizer_families, py::arg("d"));
}
