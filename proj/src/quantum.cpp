#include "qbell/quantum.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>

#include <Eigen/Eigenvalues>

#include "qbell/errors.hpp"
#include "qbell/local_realism.hpp"

namespace qbell {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_dim(int d) {
    if (d < 2) throw std::invalid_argument("local dimension must be at least 2");
}

std::vector<double> normalize_gauge(std::vector<double> phases, int d) {
    if (phases.size() != static_cast<std::size_t>(d))
        throw std::invalid_argument("each setting needs exactly d phases");
    // Subtracting the first phase from all of them is a global basis phase;
    // it leaves every projector unchanged and pins theta_0 = 0.
    const double base = phases[0];
    for (double& p : phases) p -= base;
    return phases;
}

Eigen::MatrixXcd phase_fourier_basis(const std::vector<double>& phases, int d,
                                     bool conjugate_kernel) {
    Eigen::MatrixXcd m(d, d);
    const double sign = conjugate_kernel ? -1.0 : 1.0;
    const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
            m(j, k) = std::polar(inv_sqrt_d,
                                 phases[j] + sign * kTwoPi * j * k / d);
    return m;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 step; decorrelates (seed, index) pairs.
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::vector<double> random_phases(int d, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.0, kTwoPi);
    std::vector<double> phases(d, 0.0);
    for (int j = 1; j < d; ++j) phases[j] = uni(rng);
    return phases;
}

// Real epsilon blocks for fast expectation evaluation.
std::vector<double> real_epsilon(const BellCoefficients& c) {
    if (!c.is_real(1e-9))
        throw InvalidInequalityError(
            "coefficient table fails the reality condition");
    std::vector<double> eps(c.epsilon_table().size());
    for (std::size_t i = 0; i < eps.size(); ++i)
        eps[i] = c.epsilon_table()[i].real();
    return eps;
}

// <psi|B(settings)|psi> evaluated through outcome amplitudes, without
// assembling the d^2 x d^2 operator: per settings pair the amplitude matrix
// is A^dag Psi conj(B) with Psi the d x d reshaping of psi.
class ExpectationEvaluator {
public:
    ExpectationEvaluator(const BellCoefficients& c, const Eigen::VectorXcd& psi)
        : d_(c.d()), eps_(real_epsilon(c)), psi_matrix_(d_, d_) {
        if (psi.size() != static_cast<Eigen::Index>(d_) * d_)
            throw std::invalid_argument("state vector must have length d^2");
        for (int i = 0; i < d_; ++i)
            for (int j = 0; j < d_; ++j)
                psi_matrix_(i, j) = psi(i * d_ + j);
    }

    double operator()(const std::array<Eigen::MatrixXcd, 2>& alice,
                      const std::array<Eigen::MatrixXcd, 2>& bob) const {
        double total = 0.0;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                const Eigen::MatrixXcd amp =
                    alice[a].adjoint() * psi_matrix_ * bob[b].conjugate();
                for (int k = 0; k < d_; ++k)
                    for (int l = 0; l < d_; ++l)
                        total += eps_[static_cast<std::size_t>((a * 2 + b)) * d_ +
                                      ((k - l) % d_ + d_) % d_] *
                                 std::norm(amp(k, l));
            }
        return total;
    }

    int d() const { return d_; }

private:
    int d_;
    std::vector<double> eps_;
    Eigen::MatrixXcd psi_matrix_;
};

struct PhaseSet {
    std::array<std::vector<double>, 2> alice;
    std::array<std::vector<double>, 2> bob;
};

PhaseSet standard_phases(int d) {
    auto linear = [d](double phi) {
        std::vector<double> ph(d);
        for (int j = 0; j < d; ++j) ph[j] = kTwoPi * j * phi / d;
        return ph;
    };
    return {{linear(0.0), linear(0.5)}, {linear(0.25), linear(-0.25)}};
}

PhaseSet random_phase_set(int d, std::mt19937_64& rng) {
    return {{random_phases(d, rng), random_phases(d, rng)},
            {random_phases(d, rng), random_phases(d, rng)}};
}

MeasurementSettings to_settings(int d, const PhaseSet& ph) {
    return MeasurementSettings(d, ph.alice, ph.bob);
}

// Golden-section search for the maximum of f on [lo, hi].
template <typename F>
double golden_max(F&& f, double lo, double hi, double xtol) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > xtol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

// One full coordinate-descent pass over the 4(d-1) free phases; returns the
// achieved value. `phases` is updated in place and only improving moves are
// kept, so the value is non-decreasing.
double coordinate_descent(const ExpectationEvaluator& eval, PhaseSet& phases,
                          int max_sweeps, double sweep_tol) {
    const int d = eval.d();
    auto bases = [&]() -> std::pair<std::array<Eigen::MatrixXcd, 2>,
                                    std::array<Eigen::MatrixXcd, 2>> {
        return {{phase_fourier_basis(phases.alice[0], d, false),
                 phase_fourier_basis(phases.alice[1], d, false)},
                {phase_fourier_basis(phases.bob[0], d, true),
                 phase_fourier_basis(phases.bob[1], d, true)}};
    };
    auto current = [&]() {
        auto [ba, bb] = bases();
        return eval(ba, bb);
    };

    double best = current();
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double sweep_gain = 0.0;
        for (int block = 0; block < 4; ++block) {
            std::vector<double>& ph =
                block < 2 ? phases.alice[block] : phases.bob[block - 2];
            for (int j = 1; j < d; ++j) {
                const double center = ph[j];
                auto line = [&](double x) {
                    ph[j] = x;
                    return current();
                };
                const double x =
                    golden_max(line, center - std::numbers::pi,
                               center + std::numbers::pi, 1e-10);
                ph[j] = x;
                const double v = current();
                if (v > best) {
                    sweep_gain += v - best;
                    best = v;
                } else {
                    ph[j] = center;
                }
            }
        }
        if (sweep_gain < sweep_tol) break;
    }
    return best;
}

Eigen::VectorXcd top_eigenvector(const Eigen::MatrixXcd& m, double& value) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success)
        throw InternalError("Hermitian eigensolver failed to converge");
    const Eigen::Index last = m.rows() - 1;
    value = solver.eigenvalues()(last);
    return solver.eigenvectors().col(last);
}

} // namespace

MeasurementSettings::MeasurementSettings(
    int d, std::array<std::vector<double>, 2> alice_phases,
    std::array<std::vector<double>, 2> bob_phases)
    : d_(d) {
    check_dim(d);
    for (int s = 0; s < 2; ++s) {
        alice_[s] = normalize_gauge(std::move(alice_phases[s]), d);
        bob_[s] = normalize_gauge(std::move(bob_phases[s]), d);
        alice_basis_[s] = phase_fourier_basis(alice_[s], d, false);
        bob_basis_[s] = phase_fourier_basis(bob_[s], d, true);
    }
}

MeasurementSettings MeasurementSettings::standard(int d) {
    PhaseSet ph = standard_phases(d);
    return MeasurementSettings(d, ph.alice, ph.bob);
}

BellOperator bell_operator(const BellCoefficients& c, const MeasurementSettings& m) {
    const int d = c.d();
    if (m.d() != d)
        throw std::invalid_argument("coefficients and settings disagree on d");

    BellOperator op;
    op.d = d;
    op.matrix = Eigen::MatrixXcd::Zero(d * d, d * d);
    Eigen::VectorXcd joint(d * d);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    const cplx weight =
                        c.epsilon_table()[c.idx(a, b, ((k - l) % d + d) % d)];
                    for (int i = 0; i < d; ++i)
                        for (int j = 0; j < d; ++j)
                            joint(i * d + j) =
                                m.alice_basis(a)(i, k) * m.bob_basis(b)(j, l);
                    op.matrix.noalias() += weight * (joint * joint.adjoint());
                }

    const double herm_err =
        (op.matrix - op.matrix.adjoint()).cwiseAbs().maxCoeff();
    if (herm_err > 1e-10)
        throw InvalidInequalityError(
            "Bell operator is not Hermitian (deviation " +
            std::to_string(herm_err) + "); the epsilon table is not real");
    return op;
}

Eigen::MatrixXcd correlation_operator(const MeasurementSettings& m, int a, int b,
                                      int n) {
    const int d = m.d();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d * d, d * d);
    Eigen::VectorXcd joint(d * d);
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
            const cplx weight =
                std::polar(1.0, kTwoPi * ((((n * (k - l)) % d) + d) % d) / d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    joint(i * d + j) = m.alice_basis(a)(i, k) * m.bob_basis(b)(j, l);
            out.noalias() += weight * (joint * joint.adjoint());
        }
    return out;
}

double expectation(const BellOperator& op, const Eigen::VectorXcd& psi) {
    if (psi.size() != op.matrix.rows())
        throw std::invalid_argument("state vector has wrong length");
    if (std::abs(psi.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("state vector must be normalized");
    const cplx v = psi.dot(op.matrix * psi);
    if (std::abs(v.imag()) > 1e-9)
        throw InternalError("expectation of Hermitian operator came out complex");
    return v.real();
}

QuantumMax quantum_max(const BellOperator& op) {
    QuantumMax qm;
    qm.state = top_eigenvector(op.matrix, qm.value);
    return qm;
}

Eigen::VectorXcd family_state(int d, double gamma) {
    check_dim(d);
    if (gamma < 0.0) throw std::invalid_argument("gamma must be non-negative");
    const int mid = d / 2;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(d * d);
    for (int k = 0; k < d; ++k) psi(k * d + k) = (k == mid) ? gamma : 1.0;
    const double norm = std::sqrt(static_cast<double>(d - 1) + gamma * gamma);
    return psi / norm;
}

std::vector<ScanPoint> gamma_scan(const BellCoefficients& c,
                                  const MeasurementSettings& m,
                                  const std::vector<double>& gamma_grid) {
    const BellOperator op = bell_operator(c, m);
    std::vector<ScanPoint> points;
    points.reserve(gamma_grid.size());
    for (double g : gamma_grid)
        points.push_back({g, expectation(op, family_state(c.d(), g))});
    return points;
}

std::vector<double> uniform_grid(double lo, double hi, int steps) {
    if (steps < 2 || hi <= lo)
        throw std::invalid_argument("grid needs at least 2 points and hi > lo");
    std::vector<double> grid(steps);
    for (int i = 0; i < steps; ++i)
        grid[i] = lo + (hi - lo) * i / (steps - 1);
    return grid;
}

PhaseOptimizationResult optimize_phases(const BellCoefficients& c,
                                        const Eigen::VectorXcd& psi,
                                        const PhaseOptimizerOptions& opts) {
    const int d = c.d();
    if (std::abs(psi.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("state vector must be normalized");
    const ExpectationEvaluator eval(c, psi);

    double best_value = -std::numeric_limits<double>::infinity();
    PhaseSet best_phases = standard_phases(d);
    for (int r = 0; r < opts.restarts; ++r) {
        PhaseSet phases;
        if (r == 0) {
            phases = standard_phases(d);
        } else {
            std::mt19937_64 rng(mix_seed(opts.seed, static_cast<std::uint64_t>(r)));
            phases = random_phase_set(d, rng);
        }
        const double v =
            coordinate_descent(eval, phases, opts.max_sweeps, opts.sweep_tol);
        if (v > best_value) {
            best_value = v;
            best_phases = phases;
        }
    }
    return {to_settings(d, best_phases), best_value};
}

PhaseOptimizationResult optimize_phases_eigen(const BellCoefficients& c,
                                              const PhaseOptimizerOptions& opts) {
    const int d = c.d();
    double best_value = -std::numeric_limits<double>::infinity();
    PhaseSet best_phases = standard_phases(d);

    for (int r = 0; r < opts.restarts; ++r) {
        PhaseSet phases;
        if (r == 0) {
            phases = standard_phases(d);
        } else {
            std::mt19937_64 rng(mix_seed(opts.seed, static_cast<std::uint64_t>(r)));
            phases = random_phase_set(d, rng);
        }

        double round_value;
        Eigen::VectorXcd psi = top_eigenvector(
            bell_operator(c, to_settings(d, phases)).matrix, round_value);
        for (int round = 0; round < opts.max_seesaw_rounds; ++round) {
            const ExpectationEvaluator eval(c, psi);
            coordinate_descent(eval, phases, opts.max_sweeps, opts.sweep_tol);
            double eig_value;
            psi = top_eigenvector(bell_operator(c, to_settings(d, phases)).matrix,
                                  eig_value);
            if (eig_value - round_value < opts.sweep_tol) {
                round_value = std::max(round_value, eig_value);
                break;
            }
            round_value = eig_value;
        }
        if (round_value > best_value) {
            best_value = round_value;
            best_phases = phases;
        }
    }
    return {to_settings(d, best_phases), best_value};
}

std::optional<double> noise_threshold(const BellCoefficients& c,
                                      const MeasurementSettings& m) {
    const BellOperator op = bell_operator(c, m);
    // The white-noise mixture only reduces to the pure-state expectation if
    // the identity contributes nothing, i.e. the operator is traceless.
    const double trace_mag = std::abs(op.matrix.trace());
    if (trace_mag > 1e-9)
        throw InvalidInequalityError(
            "Bell operator has non-vanishing trace " + std::to_string(trace_mag) +
            " (zeroth-order coefficients do not sum to zero); white-noise "
            "threshold undefined");
    const double me_value = expectation(op, family_state(c.d(), 1.0));
    const double lr = lr_bound(c).bound;
    if (me_value <= lr) return std::nullopt;
    return lr / me_value;
}

SlkAppendixReport verify_slk_appendix(int d, const SlkParams& params, int trials,
                                      std::uint64_t seed) {
    if (d > 8)
        throw std::invalid_argument("appendix verification supports d <= 8");
    if (trials < 1) throw std::invalid_argument("at least one trial required");

    const BellCoefficients c = build_slk(d, params);
    SlkAppendixReport report;
    report.d = d;
    report.params = params;
    report.trials = trials;
    report.seed = seed;
    report.bound = static_cast<double>(d - 1);
    report.max_observed = 0.0;

    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
        const PhaseSet phases = random_phase_set(d, rng);
        const MeasurementSettings m = to_settings(d, phases);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
            bell_operator(c, m).matrix, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success)
            throw InternalError("Hermitian eigensolver failed to converge");
        const double spectral_radius =
            std::max(std::abs(solver.eigenvalues()(0)),
                     std::abs(solver.eigenvalues()(d * d - 1)));
        if (spectral_radius > report.max_observed) {
            report.max_observed = spectral_radius;
            report.worst_alice_phases = phases.alice;
            report.worst_bob_phases = phases.bob;
        }
    }

    report.pass = report.max_observed <= report.bound + 1e-8;
    if (!report.pass)
        throw InternalError(
            "SLK operator bound exceeded: observed " +
            std::to_string(report.max_observed) + " > " +
            std::to_string(report.bound) +
            "; the bound is a theorem, so this is an implementation bug");
    return report;
}

} // namespace qbell
