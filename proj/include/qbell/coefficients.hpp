#pragma once

#include <array>
#include <complex>
#include <vector>

namespace qbell {

using cplx = std::complex<double>;

/// Flat 2x2xd coefficient table, laid out block-major: entry (a,b,n) lives at
/// index (a*2 + b)*d + n with a,b in {0,1} for the two settings per party.
/// Block order is therefore (1,1), (1,2), (2,1), (2,2).
using CoeffTable = std::vector<cplx>;

/// epsilon[a][b][alpha] = sum_n f[a][b][n] * omega^(n*alpha), omega = exp(2*pi*i/d).
/// Throws std::invalid_argument unless f has size 4*d.
CoeffTable fourier_to_probability(const CoeffTable& f, int d);

/// Inverse map: f[a][b][n] = (1/d) * sum_alpha epsilon[a][b][alpha] * omega^(-n*alpha).
CoeffTable fourier_to_correlation(const CoeffTable& epsilon, int d);

/// A bipartite Bell functional of local dimension d, held simultaneously in
/// the correlation-function representation (f) and the joint-probability
/// representation (epsilon). The two tables are Fourier duals of each other.
class BellCoefficients {
public:
    /// Build from a correlation-space table; epsilon is derived.
    static BellCoefficients from_correlation(int d, CoeffTable f);
    /// Build from a probability-space table; f is derived.
    static BellCoefficients from_probability(int d, CoeffTable epsilon);
    /// Build from both tables at once (used by the named-family builders,
    /// which have closed forms in both spaces).
    static BellCoefficients from_tables(int d, CoeffTable f, CoeffTable epsilon);

    int d() const { return d_; }

    /// Correlation-space coefficient f_ab(n); a,b in {0,1}, n in [0,d).
    cplx f(int a, int b, int n) const { return f_[idx(a, b, n)]; }
    /// Probability-space coefficient epsilon_ab(alpha); alpha in [0,d).
    cplx epsilon(int a, int b, int alpha) const { return epsilon_[idx(a, b, alpha)]; }

    const CoeffTable& f_table() const { return f_; }
    const CoeffTable& epsilon_table() const { return epsilon_; }

    /// Largest |Im epsilon| over the table. A physical inequality needs this
    /// to vanish (up to tolerance).
    double max_imag_epsilon() const;
    bool is_real(double tol = 1e-9) const { return max_imag_epsilon() <= tol; }

    /// sum_{a,b} f_ab(0); vanishes for a well-normalized functional.
    cplx zeroth_order_sum() const;

    /// Largest violation of epsilon_ab(alpha) = sum_n f_ab(n) omega^(n alpha)
    /// over all entries.
    double dual_consistency_error() const;

    std::size_t idx(int a, int b, int n) const {
        return static_cast<std::size_t>((a * 2 + b) * d_ + n);
    }

private:
    BellCoefficients(int d, CoeffTable f, CoeffTable epsilon);

    int d_;
    CoeffTable f_;
    CoeffTable epsilon_;
};

/// Parameters of the SLK family. eta1/eta2 must be +1/2 or -1/2; delta is any
/// real (the local-realistic bound is 1/2-periodic in it). The default variant
/// is the optimal one (delta = 1/4) with the eta signs whose bound-achieving
/// strategies match the four canonical generator families.
struct SlkParams {
    double delta = 0.25;
    double eta1 = -0.5;
    double eta2 = 0.5;

    /// delta reduced into [0, 1/2) by the stated periodicity.
    double normalized_delta() const;
};

/// Probability-space kernel of the SLK family: for x not a multiple of d,
/// S(x) = (cot(pi x / d) sin(2 pi x) - cos(2 pi x) - 1) / 4, and
/// S(x) = (d - 1)/2 on the singular set x = 0 (mod d), which is also the
/// continuous limit.
double slk_kernel(double x, int d);

BellCoefficients build_chsh();
BellCoefficients build_cglmp(int d);
BellCoefficients build_slk(int d, const SlkParams& params);

/// Complex d x d correlation weight mu[k*d + l].
struct CorrelationWeight {
    int d = 0;
    std::vector<cplx> mu;
};

/// mu_{k,l} = omega^{n(k-l)}, the canonical weight of order n.
CorrelationWeight fourier_weight(int d, int n);

/// Pass/fail flags for the three correlation-weight conditions:
/// C1: every row sum and column sum vanishes;
/// C2: translation invariance, mu_{k,l} = mu_{k+g,l+g mod d} for all g;
/// C3: |mu_{k+1,l} - mu_{k,l}| = |mu_{k,l+1} - mu_{k,l}|, indices mod d.
struct WeightConditionReport {
    bool c1 = false;
    bool c2 = false;
    bool c3 = false;
    bool all() const { return c1 && c2 && c3; }
};

/// Throws std::invalid_argument if w.mu is not d x d.
WeightConditionReport validate_weight(const CorrelationWeight& w, double tol = 1e-12);

} // namespace qbell
