#pragma once

#include <array>
#include <vector>

#include "qbell/coefficients.hpp"

namespace qbell {

/// Largest local dimension accepted by the enumeration routines. d^4
/// strategies are enumerated exhaustively; 16^4 = 65536 is still instant,
/// anything much larger deserves a different algorithm.
inline constexpr int kMaxEnumerationDim = 16;

/// One deterministic local-realistic assignment: the outcome (as a power of
/// omega) each observable would reveal.
struct DeterministicStrategy {
    int a1 = 0;
    int a2 = 0;
    int b1 = 0;
    int b2 = 0;

    friend bool operator==(const DeterministicStrategy&,
                           const DeterministicStrategy&) = default;
};

/// Outcome differences (alpha_11, alpha_12, alpha_21, alpha_22), each
/// (A_a - B_b) mod d. They always satisfy
/// alpha_11 + alpha_22 = alpha_12 + alpha_21 (mod d).
std::array<int, 4> strategy_residues(const DeterministicStrategy& s, int d);

/// All d^4 strategies in lexicographic (A1, A2, B1, B2) order.
std::vector<DeterministicStrategy> enumerate_strategies(int d);

/// Value of the Bell functional at a deterministic strategy:
/// sum_{a,b} Re epsilon_ab(alpha_ab). Throws InvalidInequalityError if any
/// of the four coefficients used has |Im| > 1e-9.
double strategy_value(const DeterministicStrategy& s, const BellCoefficients& c);

struct LrBoundResult {
    double bound = 0.0;
    /// Strategies achieving the bound within tolerance, sorted by (A1,A2,B1,B2).
    std::vector<DeterministicStrategy> maximizers;
    double tolerance = 0.0;
};

/// Local-realistic upper bound by exhaustive enumeration of all d^4
/// deterministic strategies. A strategy counts as a maximizer when
/// value >= bound*(1 - tol) - 1e-12 (absolute floor for bounds near zero).
LrBoundResult lr_bound(const BellCoefficients& c, double tol = 1e-9);

/// Closed form of the lowest SLK local-realistic bound (the delta = 1/4
/// variant): (3 cot(pi/4d) - cot(3 pi/4d))/4 - 1.
double optimal_slk_bound_closed_form(int d);

} // namespace qbell
