#include "qbell/coefficients.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qbell/errors.hpp"

namespace qbell {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_dim(int d) {
    if (d < 2) throw std::invalid_argument("local dimension must be at least 2");
}

void check_table(const CoeffTable& t, int d, const char* name) {
    check_dim(d);
    if (t.size() != static_cast<std::size_t>(4 * d))
        throw std::invalid_argument(std::string(name) +
                                    " table must have 2x2x" + std::to_string(d) +
                                    " entries");
}

cplx unit_root(int d, long long power) {
    // exp(2*pi*i*power/d) with the angle reduced first to keep precision.
    long long r = power % d;
    if (r < 0) r += d;
    return std::polar(1.0, kTwoPi * static_cast<double>(r) / d);
}

} // namespace

CoeffTable fourier_to_probability(const CoeffTable& f, int d) {
    check_table(f, d, "correlation");
    CoeffTable eps(f.size());
    for (int ab = 0; ab < 4; ++ab) {
        for (int alpha = 0; alpha < d; ++alpha) {
            cplx acc = 0.0;
            for (int n = 0; n < d; ++n)
                acc += f[ab * d + n] * unit_root(d, static_cast<long long>(n) * alpha);
            eps[ab * d + alpha] = acc;
        }
    }
    return eps;
}

CoeffTable fourier_to_correlation(const CoeffTable& epsilon, int d) {
    check_table(epsilon, d, "probability");
    CoeffTable f(epsilon.size());
    for (int ab = 0; ab < 4; ++ab) {
        for (int n = 0; n < d; ++n) {
            cplx acc = 0.0;
            for (int alpha = 0; alpha < d; ++alpha)
                acc += epsilon[ab * d + alpha] *
                       unit_root(d, -static_cast<long long>(n) * alpha);
            f[ab * d + n] = acc / static_cast<double>(d);
        }
    }
    return f;
}

BellCoefficients::BellCoefficients(int d, CoeffTable f, CoeffTable epsilon)
    : d_(d), f_(std::move(f)), epsilon_(std::move(epsilon)) {}

BellCoefficients BellCoefficients::from_correlation(int d, CoeffTable f) {
    CoeffTable eps = fourier_to_probability(f, d);
    return BellCoefficients(d, std::move(f), std::move(eps));
}

BellCoefficients BellCoefficients::from_probability(int d, CoeffTable epsilon) {
    CoeffTable f = fourier_to_correlation(epsilon, d);
    return BellCoefficients(d, std::move(f), std::move(epsilon));
}

BellCoefficients BellCoefficients::from_tables(int d, CoeffTable f, CoeffTable epsilon) {
    check_table(f, d, "correlation");
    check_table(epsilon, d, "probability");
    return BellCoefficients(d, std::move(f), std::move(epsilon));
}

double BellCoefficients::max_imag_epsilon() const {
    double m = 0.0;
    for (const cplx& e : epsilon_) m = std::max(m, std::abs(e.imag()));
    return m;
}

cplx BellCoefficients::zeroth_order_sum() const {
    return f(0, 0, 0) + f(0, 1, 0) + f(1, 0, 0) + f(1, 1, 0);
}

double BellCoefficients::dual_consistency_error() const {
    CoeffTable derived = fourier_to_probability(f_, d_);
    double m = 0.0;
    for (std::size_t i = 0; i < derived.size(); ++i)
        m = std::max(m, std::abs(derived[i] - epsilon_[i]));
    return m;
}

double SlkParams::normalized_delta() const {
    double r = std::fmod(delta, 0.5);
    if (r < 0.0) r += 0.5;
    return r;
}

double slk_kernel(double x, int d) {
    check_dim(d);
    double r = std::fmod(x, static_cast<double>(d));
    if (r < 0.0) r += d;
    if (std::min(r, d - r) < 1e-9) return 0.5 * (d - 1);
    const double px = std::numbers::pi * x;
    return 0.25 * (std::cos(px / d) / std::sin(px / d) * std::sin(2.0 * px) -
                   std::cos(2.0 * px) - 1.0);
}

BellCoefficients build_chsh() {
    const int d = 2;
    CoeffTable f(4 * d, 0.0);
    const double f1[4] = {1.0, 1.0, -1.0, 1.0}; // (f_11, f_12, f_21, f_22)(n=1)
    CoeffTable eps(4 * d);
    for (int ab = 0; ab < 4; ++ab) {
        f[ab * d + 1] = f1[ab];
        for (int alpha = 0; alpha < d; ++alpha)
            eps[ab * d + alpha] = f1[ab] * (alpha % 2 == 0 ? 1.0 : -1.0);
    }
    return BellCoefficients::from_tables(d, std::move(f), std::move(eps));
}

BellCoefficients build_cglmp(int d) {
    check_dim(d);
    CoeffTable eps(4 * d);
    const double scale = 2.0 / (d - 1);
    for (int alpha = 0; alpha < d; ++alpha) {
        const int shifted = ((alpha - 1) % d + d) % d; // positive residue of alpha-1
        eps[0 * d + alpha] = 1.0 - scale * alpha;       // epsilon_11
        eps[1 * d + alpha] = -1.0 + scale * shifted;    // epsilon_12
        eps[2 * d + alpha] = -1.0 + scale * alpha;      // epsilon_21
        eps[3 * d + alpha] = 1.0 - scale * alpha;       // epsilon_22
    }
    // Correlation-space closed form; n = 0 entries vanish.
    CoeffTable f(4 * d, 0.0);
    for (int n = 1; n < d; ++n) {
        const cplx wn = unit_root(d, n);
        const cplx wmn = unit_root(d, -n);
        f[0 * d + n] = scale / (1.0 - wmn);
        f[1 * d + n] = scale / (1.0 - wn);
        f[2 * d + n] = scale / (wmn - 1.0);
        f[3 * d + n] = scale / (1.0 - wmn);
    }
    return BellCoefficients::from_tables(d, std::move(f), std::move(eps));
}

BellCoefficients build_slk(int d, const SlkParams& params) {
    check_dim(d);
    auto valid_eta = [](double e) {
        return std::abs(e - 0.5) < 1e-12 || std::abs(e + 0.5) < 1e-12;
    };
    if (!valid_eta(params.eta1) || !valid_eta(params.eta2))
        throw std::invalid_argument("SLK eta parameters must be +1/2 or -1/2");

    const double z[4] = {params.delta,
                         params.delta + params.eta1,
                         params.delta + params.eta2,
                         params.delta + params.eta1 + params.eta2};
    CoeffTable f(4 * d, 0.0);
    CoeffTable eps(4 * d);
    for (int ab = 0; ab < 4; ++ab) {
        for (int n = 1; n < d; ++n)
            f[ab * d + n] = 0.25 * (std::polar(1.0, kTwoPi * n * z[ab] / d) +
                                    std::polar(1.0, kTwoPi * (n - d) * z[ab] / d));
        for (int alpha = 0; alpha < d; ++alpha)
            eps[ab * d + alpha] = slk_kernel(z[ab] + alpha, d);
    }
    return BellCoefficients::from_tables(d, std::move(f), std::move(eps));
}

CorrelationWeight fourier_weight(int d, int n) {
    check_dim(d);
    CorrelationWeight w;
    w.d = d;
    w.mu.resize(static_cast<std::size_t>(d) * d);
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
            w.mu[k * d + l] = unit_root(d, static_cast<long long>(n) * (k - l));
    return w;
}

WeightConditionReport validate_weight(const CorrelationWeight& w, double tol) {
    const int d = w.d;
    check_dim(d);
    if (w.mu.size() != static_cast<std::size_t>(d) * d)
        throw std::invalid_argument("correlation weight table must be d x d");

    auto mu = [&](int k, int l) -> const cplx& {
        return w.mu[static_cast<std::size_t>(((k % d + d) % d)) * d + ((l % d + d) % d)];
    };

    WeightConditionReport rep;
    rep.c1 = true;
    for (int k = 0; k < d; ++k) {
        cplx row = 0.0, col = 0.0;
        for (int l = 0; l < d; ++l) {
            row += mu(k, l);
            col += mu(l, k);
        }
        if (std::abs(row) > tol || std::abs(col) > tol) rep.c1 = false;
    }
    rep.c2 = true;
    for (int g = 1; g < d && rep.c2; ++g)
        for (int k = 0; k < d && rep.c2; ++k)
            for (int l = 0; l < d; ++l)
                if (std::abs(mu(k, l) - mu(k + g, l + g)) > tol) {
                    rep.c2 = false;
                    break;
                }
    rep.c3 = true;
    for (int k = 0; k < d && rep.c3; ++k)
        for (int l = 0; l < d; ++l) {
            const double dk = std::abs(mu(k + 1, l) - mu(k, l));
            const double dl = std::abs(mu(k, l + 1) - mu(k, l));
            if (std::abs(dk - dl) > tol) {
                rep.c3 = false;
                break;
            }
        }
    return rep;
}

} // namespace qbell
