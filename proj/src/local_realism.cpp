#include "qbell/local_realism.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qbell/errors.hpp"

namespace qbell {
namespace {

void check_enumeration_dim(int d) {
    if (d < 2) throw std::invalid_argument("local dimension must be at least 2");
    if (d > kMaxEnumerationDim)
        throw std::invalid_argument("exhaustive enumeration supports d <= " +
                                    std::to_string(kMaxEnumerationDim));
}

double real_checked(const cplx& e, double tol) {
    if (std::abs(e.imag()) > tol)
        throw InvalidInequalityError(
            "probability-space coefficient has imaginary part " +
            std::to_string(e.imag()) + "; not a physical inequality");
    return e.real();
}

} // namespace

std::array<int, 4> strategy_residues(const DeterministicStrategy& s, int d) {
    auto res = [d](int x, int y) { return ((x - y) % d + d) % d; };
    return {res(s.a1, s.b1), res(s.a1, s.b2), res(s.a2, s.b1), res(s.a2, s.b2)};
}

std::vector<DeterministicStrategy> enumerate_strategies(int d) {
    check_enumeration_dim(d);
    std::vector<DeterministicStrategy> out;
    out.reserve(static_cast<std::size_t>(d) * d * d * d);
    for (int a1 = 0; a1 < d; ++a1)
        for (int a2 = 0; a2 < d; ++a2)
            for (int b1 = 0; b1 < d; ++b1)
                for (int b2 = 0; b2 < d; ++b2)
                    out.push_back({a1, a2, b1, b2});
    return out;
}

double strategy_value(const DeterministicStrategy& s, const BellCoefficients& c) {
    const int d = c.d();
    const auto alpha = strategy_residues(s, d);
    double v = 0.0;
    for (int ab = 0; ab < 4; ++ab)
        v += real_checked(c.epsilon_table()[c.idx(ab / 2, ab % 2, alpha[ab])], 1e-9);
    return v;
}

LrBoundResult lr_bound(const BellCoefficients& c, double tol) {
    const int d = c.d();
    check_enumeration_dim(d);
    if (!c.is_real(1e-9))
        throw InvalidInequalityError(
            "coefficient table fails the reality condition (max |Im epsilon| = " +
            std::to_string(c.max_imag_epsilon()) + ")");

    // Precompute the real epsilon blocks once; the scan is then four lookups
    // per strategy.
    std::vector<double> eps(static_cast<std::size_t>(4) * d);
    for (int ab = 0; ab < 4; ++ab)
        for (int alpha = 0; alpha < d; ++alpha)
            eps[ab * d + alpha] = c.epsilon_table()[ab * d + alpha].real();

    const auto strategies = enumerate_strategies(d);
    std::vector<double> values;
    values.reserve(strategies.size());
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& s : strategies) {
        const auto alpha = strategy_residues(s, d);
        const double v = eps[0 * d + alpha[0]] + eps[1 * d + alpha[1]] +
                         eps[2 * d + alpha[2]] + eps[3 * d + alpha[3]];
        values.push_back(v);
        if (v > best) best = v;
    }

    LrBoundResult result;
    result.bound = best;
    result.tolerance = tol;
    const double cutoff = best * (1.0 - tol) - 1e-12;
    for (std::size_t i = 0; i < strategies.size(); ++i)
        if (values[i] >= cutoff) result.maximizers.push_back(strategies[i]);
    // Enumeration order is already lexicographic in (A1, A2, B1, B2).
    return result;
}

double optimal_slk_bound_closed_form(int d) {
    if (d < 2) throw std::invalid_argument("local dimension must be at least 2");
    const double q = std::numbers::pi / (4.0 * d);
    auto cot = [](double x) { return std::cos(x) / std::sin(x); };
    return 0.25 * (3.0 * cot(q) - cot(3.0 * q)) - 1.0;
}

} // namespace qbell
