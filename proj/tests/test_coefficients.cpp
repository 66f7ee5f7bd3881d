#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qbell/coefficients.hpp"
#include "qbell/errors.hpp"

using namespace qbell;

namespace {

cplx omega_pow(int d, long long p) {
    long long r = p % d;
    if (r < 0) r += d;
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / d);
}

// Independent oracle for the CGLMP probability-space table: the four closed
// forms evaluated entry by entry, with the positive residue in the (1,2) block.
CoeffTable cglmp_epsilon_oracle(int d) {
    CoeffTable eps(4 * d);
    for (int alpha = 0; alpha < d; ++alpha) {
        const double dot = ((alpha - 1) % d + d) % d;
        eps[0 * d + alpha] = 1.0 - 2.0 * alpha / (d - 1);
        eps[1 * d + alpha] = -1.0 + 2.0 * dot / (d - 1);
        eps[2 * d + alpha] = -1.0 + 2.0 * alpha / (d - 1);
        eps[3 * d + alpha] = 1.0 - 2.0 * alpha / (d - 1);
    }
    return eps;
}

// Correlation-space closed form, written independently of the builder.
CoeffTable cglmp_f_oracle(int d) {
    CoeffTable f(4 * d, 0.0);
    for (int n = 1; n < d; ++n) {
        const double s = 2.0 / (d - 1);
        f[0 * d + n] = s / (1.0 - omega_pow(d, -n));
        f[1 * d + n] = s / (1.0 - omega_pow(d, n));
        f[2 * d + n] = s / (omega_pow(d, -n) - 1.0);
        f[3 * d + n] = s / (1.0 - omega_pow(d, -n));
    }
    return f;
}

CoeffTable random_table(int d, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    CoeffTable t(4 * d);
    for (auto& e : t) e = cplx(uni(rng), uni(rng));
    return t;
}

double table_distance(const CoeffTable& a, const CoeffTable& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace

TEST_CASE("fourier map: CHSH-style d=2 tables") {
    const int d = 2;
    CoeffTable f(4 * d, 0.0);
    const double f1[4] = {1.0, 1.0, -1.0, 1.0};
    for (int ab = 0; ab < 4; ++ab) f[ab * d + 1] = f1[ab];

    const CoeffTable eps = fourier_to_probability(f, d);
    for (int ab = 0; ab < 4; ++ab)
        for (int alpha = 0; alpha < d; ++alpha)
            CHECK(std::abs(eps[ab * d + alpha] -
                           f1[ab] * (alpha == 0 ? 1.0 : -1.0)) < 1e-12);
}

TEST_CASE("fourier map: zero table maps to zero") {
    const CoeffTable zeros(4 * 5, 0.0);
    for (const cplx& e : fourier_to_probability(zeros, 5)) CHECK(std::abs(e) == 0.0);
    for (const cplx& e : fourier_to_correlation(zeros, 5)) CHECK(std::abs(e) == 0.0);
}

TEST_CASE("fourier map: CGLMP d=3 closed forms are duals of each other") {
    const int d = 3;
    CHECK(table_distance(fourier_to_probability(cglmp_f_oracle(d), d),
                         cglmp_epsilon_oracle(d)) < 1e-12);
    CHECK(table_distance(fourier_to_correlation(cglmp_epsilon_oracle(d), d),
                         cglmp_f_oracle(d)) < 1e-12);
}

TEST_CASE("fourier map: roundtrip is the identity for random tables") {
    std::mt19937_64 rng(20240517);
    for (int d = 2; d <= 10; ++d) {
        const CoeffTable f = random_table(d, rng);
        CHECK(table_distance(fourier_to_correlation(fourier_to_probability(f, d), d),
                             f) < 1e-12);
        const CoeffTable eps = random_table(d, rng);
        CHECK(table_distance(fourier_to_probability(fourier_to_correlation(eps, d), d),
                             eps) < 1e-12);
    }
}

TEST_CASE("fourier map: constant epsilon has no higher-order content") {
    const int d = 6;
    CoeffTable eps(4 * d);
    for (int ab = 0; ab < 4; ++ab)
        for (int alpha = 0; alpha < d; ++alpha) eps[ab * d + alpha] = 0.25 * (ab + 1);
    const CoeffTable f = fourier_to_correlation(eps, d);
    for (int ab = 0; ab < 4; ++ab)
        for (int n = 1; n < d; ++n) CHECK(std::abs(f[ab * d + n]) < 1e-12);
}

TEST_CASE("fourier map: dimension mismatch is rejected") {
    CHECK_THROWS_AS(fourier_to_probability(CoeffTable(7, 0.0), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(fourier_to_correlation(CoeffTable(12, 0.0), 4),
                    std::invalid_argument);
}

TEST_CASE("sum rule: sum_alpha epsilon = d * f(0)") {
    std::mt19937_64 rng(7);
    for (int d : {2, 3, 5, 8}) {
        const BellCoefficients c =
            BellCoefficients::from_correlation(d, random_table(d, rng));
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                cplx sum = 0.0;
                for (int alpha = 0; alpha < d; ++alpha) sum += c.epsilon(a, b, alpha);
                CHECK(std::abs(sum - static_cast<double>(d) * c.f(a, b, 0)) < 1e-10);
            }
    }
}

TEST_CASE("build_chsh: coefficient values and invariants") {
    const BellCoefficients c = build_chsh();
    CHECK(c.d() == 2);
    CHECK(c.f(1, 0, 1) == cplx(-1.0));
    CHECK(c.f(0, 0, 1) == cplx(1.0));
    CHECK(c.epsilon(0, 0, 0) == cplx(1.0));
    CHECK(c.epsilon(0, 0, 1) == cplx(-1.0));
    CHECK(c.max_imag_epsilon() < 1e-12);
    CHECK(std::abs(c.zeroth_order_sum()) < 1e-12);
    CHECK(c.dual_consistency_error() < 1e-12);
}

TEST_CASE("build_cglmp: d=3 probability table") {
    const BellCoefficients c = build_cglmp(3);
    CHECK(c.epsilon(0, 0, 0).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(c.epsilon(0, 0, 1).real() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(c.epsilon(0, 0, 2).real() == doctest::Approx(-1.0).epsilon(1e-14));
    // positive-residue rule: (0 - 1) mod 3 = 2, so epsilon_12(0) = -1 + 2*2/2 = 1
    CHECK(c.epsilon(0, 1, 0).real() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("build_cglmp: matches the entrywise oracles for d up to 8") {
    for (int d = 2; d <= 8; ++d) {
        const BellCoefficients c = build_cglmp(d);
        CHECK(table_distance(c.epsilon_table(), cglmp_epsilon_oracle(d)) < 1e-12);
        CHECK(table_distance(c.f_table(), cglmp_f_oracle(d)) < 1e-12);
        for (int ab = 0; ab < 4; ++ab) CHECK(std::abs(c.f(ab / 2, ab % 2, 0)) == 0.0);
        CHECK(c.dual_consistency_error() < 1e-12);
        CHECK(c.max_imag_epsilon() < 1e-9);
        CHECK(std::abs(c.zeroth_order_sum()) < 1e-12);
    }
    CHECK_THROWS_AS(build_cglmp(1), std::invalid_argument);
}

TEST_CASE("slk_kernel: singular branch and periodicity") {
    for (int d : {2, 3, 5}) {
        CHECK(slk_kernel(0.0, d) == doctest::Approx(0.5 * (d - 1)));
        CHECK(slk_kernel(static_cast<double>(d), d) == doctest::Approx(0.5 * (d - 1)));
        CHECK(slk_kernel(-static_cast<double>(d), d) == doctest::Approx(0.5 * (d - 1)));
        for (double x : {0.3, 1.25, 2.7})
            CHECK(slk_kernel(x, d) == doctest::Approx(slk_kernel(x + d, d)).epsilon(1e-12));
    }
    // continuity at the singular point
    CHECK(slk_kernel(1e-7, 3) == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("build_slk: delta=0 diagonal blocks hit the kernel maximum") {
    for (int d = 2; d <= 6; ++d) {
        const BellCoefficients c = build_slk(d, {0.0, 0.5, 0.5});
        CHECK(c.epsilon(0, 0, 0).real() == doctest::Approx(0.5 * (d - 1)));
        for (int ab = 0; ab < 4; ++ab) CHECK(std::abs(c.f(ab / 2, ab % 2, 0)) == 0.0);
    }
}

TEST_CASE("build_slk: dual consistency of the two closed forms") {
    for (int d : {2, 3, 4, 5}) {
        for (double delta : {0.0, 0.1, 0.25, 0.4}) {
            for (double e1 : {0.5, -0.5}) {
                for (double e2 : {0.5, -0.5}) {
                    const BellCoefficients c = build_slk(d, {delta, e1, e2});
                    CHECK(c.dual_consistency_error() < 1e-9);
                    CHECK(c.max_imag_epsilon() < 1e-9);
                    CHECK(std::abs(c.zeroth_order_sum()) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("reality condition is conjugate symmetry of the f table") {
    for (const BellCoefficients& c :
         {build_chsh(), build_cglmp(4), build_slk(5, {0.3, 0.5, -0.5})}) {
        const int d = c.d();
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int n = 0; n < d; ++n)
                    CHECK(std::abs(c.f(a, b, n) -
                                   std::conj(c.f(a, b, (d - n) % d))) < 1e-12);
    }
}

TEST_CASE("build_slk: eta values are validated") {
    CHECK_THROWS_AS(build_slk(3, {0.25, 0.3, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(build_slk(3, {0.25, 0.5, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(build_slk(1, {0.25, 0.5, 0.5}), std::invalid_argument);
}

TEST_CASE("SlkParams: delta normalization uses the half-period") {
    CHECK(SlkParams{0.6, 0.5, 0.5}.normalized_delta() == doctest::Approx(0.1));
    CHECK(SlkParams{-0.1, 0.5, 0.5}.normalized_delta() == doctest::Approx(0.4));
    CHECK(SlkParams{0.25, 0.5, 0.5}.normalized_delta() == doctest::Approx(0.25));
}

TEST_CASE("validate_weight: fourier weights pass all conditions") {
    for (int d = 2; d <= 10; ++d)
        for (int n = 1; n < d; ++n) {
            const auto rep = validate_weight(fourier_weight(d, n));
            CHECK(rep.c1);
            CHECK(rep.c2);
            CHECK(rep.c3);
        }
}

TEST_CASE("validate_weight: constant weight fails only C1") {
    CorrelationWeight w;
    w.d = 4;
    w.mu.assign(16, cplx(1.0));
    const auto rep = validate_weight(w);
    CHECK_FALSE(rep.c1);
    CHECK(rep.c2);
    CHECK(rep.c3);
    CHECK_FALSE(rep.all());
}

TEST_CASE("validate_weight: non-square table is rejected") {
    CorrelationWeight w;
    w.d = 3;
    w.mu.assign(8, cplx(0.0));
    CHECK_THROWS_AS(validate_weight(w), std::invalid_argument);
}
