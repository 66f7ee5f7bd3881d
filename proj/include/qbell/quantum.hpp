#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qbell/coefficients.hpp"

namespace qbell {

/// Two d-outcome measurement bases per party, parametrized by d phases each
/// (the first fixed to 0 as a gauge). Alice's basis for a setting has k-th
/// column (1/sqrt d) sum_j exp(i theta_j) omega^{jk} |j>; Bob's uses the
/// conjugate Fourier kernel omega^{-jl}, matching the A B* pairing of the
/// correlation functions. Every such matrix is unitary regardless of phases.
class MeasurementSettings {
public:
    MeasurementSettings(int d,
                        std::array<std::vector<double>, 2> alice_phases,
                        std::array<std::vector<double>, 2> bob_phases);

    /// Linear phases theta_j = 2 pi j phi / d with phi_A = (0, 1/2) and
    /// phi_B = (1/4, -1/4): the configuration that is optimal for the CGLMP
    /// family at the maximally entangled state.
    static MeasurementSettings standard(int d);

    int d() const { return d_; }
    const std::vector<double>& alice_phases(int setting) const { return alice_[setting]; }
    const std::vector<double>& bob_phases(int setting) const { return bob_[setting]; }

    /// Derived orthonormal basis for one party/setting; columns are the
    /// measurement vectors.
    const Eigen::MatrixXcd& alice_basis(int setting) const { return alice_basis_[setting]; }
    const Eigen::MatrixXcd& bob_basis(int setting) const { return bob_basis_[setting]; }

private:
    int d_;
    std::array<std::vector<double>, 2> alice_;
    std::array<std::vector<double>, 2> bob_;
    std::array<Eigen::MatrixXcd, 2> alice_basis_;
    std::array<Eigen::MatrixXcd, 2> bob_basis_;
};

/// d^2 x d^2 Hermitian Bell operator: sum over settings and outcomes of
/// epsilon_ab((k-l) mod d) P^a_k (x) Q^b_l. Traceless whenever the zeroth
/// order coefficients sum to zero.
struct BellOperator {
    int d = 0;
    Eigen::MatrixXcd matrix;
};

/// Throws InvalidInequalityError when the assembled operator is not Hermitian
/// to 1e-10 (which happens exactly when the epsilon table is not real).
BellOperator bell_operator(const BellCoefficients& c, const MeasurementSettings& m);

/// <psi|B|psi>. psi must be unit-norm within 1e-9.
double expectation(const BellOperator& op, const Eigen::VectorXcd& psi);

/// n-th order correlation operator sum_{k,l} omega^{n(k-l)} P^a_k (x) Q^b_l
/// for one pair of settings (a, b in {0,1}).
Eigen::MatrixXcd correlation_operator(const MeasurementSettings& m, int a, int b, int n);

struct QuantumMax {
    double value = 0.0;
    Eigen::VectorXcd state;
};

/// Largest eigenvalue of the Bell operator and an associated unit eigenvector.
QuantumMax quantum_max(const BellOperator& op);

/// Schmidt-diagonal scan family: (|00> + ... + gamma|mid,mid> + ...)/sqrt(n)
/// with mid = floor(d/2); gamma = 1 is the maximally entangled state.
Eigen::VectorXcd family_state(int d, double gamma);

struct ScanPoint {
    double gamma = 0.0;
    double value = 0.0;
};

/// Expectation of the family state across a gamma grid, settings held fixed.
std::vector<ScanPoint> gamma_scan(const BellCoefficients& c,
                                  const MeasurementSettings& m,
                                  const std::vector<double>& gamma_grid);

/// Evenly spaced grid with `steps` points including both endpoints.
std::vector<double> uniform_grid(double lo, double hi, int steps);

struct PhaseOptimizerOptions {
    int restarts = 8;
    int max_sweeps = 200;      // coordinate-descent sweeps per descent
    int max_seesaw_rounds = 200;
    double sweep_tol = 1e-10;  // stop when a sweep improves less than this
    std::uint64_t seed = 0;
};

struct PhaseOptimizationResult {
    MeasurementSettings settings;
    double value = 0.0;
};

/// Derivative-free maximization of <psi|B(theta)|psi> over the 4(d-1) free
/// phases: cyclic coordinate descent with golden-section line search and
/// seeded restarts (restart 0 starts from the standard settings). The best
/// value never decreases across iterations.
PhaseOptimizationResult optimize_phases(const BellCoefficients& c,
                                        const Eigen::VectorXcd& psi,
                                        const PhaseOptimizerOptions& opts = {});

/// See-saw variant: alternates coordinate descent with replacing psi by the
/// top eigenvector of the current operator, maximizing the largest eigenvalue
/// itself.
PhaseOptimizationResult optimize_phases_eigen(const BellCoefficients& c,
                                              const PhaseOptimizerOptions& opts = {});

/// Minimal weight p for which p|psi_m><psi_m| + (1-p) I/d^2 still violates
/// the inequality: lr_bound / <psi_m|B|psi_m> with psi_m the gamma = 1 family
/// state. Empty when the settings produce no violation. The identity term
/// drops out because the operator is traceless; this is asserted, not assumed.
std::optional<double> noise_threshold(const BellCoefficients& c,
                                      const MeasurementSettings& m);

struct SlkAppendixReport {
    int d = 0;
    SlkParams params;
    int trials = 0;
    std::uint64_t seed = 0;
    /// Largest |eigenvalue| seen over all trials.
    double max_observed = 0.0;
    double bound = 0.0; // d - 1
    bool pass = false;
    /// Phases of the settings realizing max_observed.
    std::array<std::vector<double>, 2> worst_alice_phases;
    std::array<std::vector<double>, 2> worst_bob_phases;
};

/// Spectral check of the SLK operator bound |<B>| <= d-1 over `trials`
/// random phase-parametrized settings, each seeded by (seed, trial index).
/// A violation beyond 1e-8 throws InternalError: the bound is a theorem, so
/// exceeding it means the implementation is wrong.
SlkAppendixReport verify_slk_appendix(int d, const SlkParams& params,
                                      int trials, std::uint64_t seed);

} // namespace qbell
