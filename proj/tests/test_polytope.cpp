#include <doctest.h>

#include <array>
#include <cmath>
#include <random>
#include <set>

#include "qbell/coefficients.hpp"
#include "qbell/local_realism.hpp"
#include "qbell/polytope.hpp"

using namespace qbell;

namespace {

std::array<int, 4> one_positions(const PolytopeGenerator& g, int d) {
    std::array<int, 4> pos{-1, -1, -1, -1};
    for (int block = 0; block < 4; ++block)
        for (int i = 0; i < d * d; ++i)
            if (g.vec[static_cast<std::size_t>(block) * d * d + i] == 1.0)
                pos[block] = i;
    return pos;
}

std::set<std::array<int, 4>> maximizer_residues(const BellCoefficients& c) {
    std::set<std::array<int, 4>> out;
    for (const auto& s : lr_bound(c).maximizers)
        out.insert(strategy_residues(s, c.d()));
    return out;
}

} // namespace

TEST_CASE("generator: block layout") {
    const PolytopeGenerator g2 = generator({0, 0, 0, 0}, 2);
    CHECK(g2.vec.size() == 16);
    int ones = 0;
    for (std::size_t i = 0; i < g2.vec.size(); ++i)
        if (g2.vec[i] == 1.0) {
            ++ones;
            CHECK((i == 0 || i == 4 || i == 8 || i == 12));
        }
    CHECK(ones == 4);

    // d=3, (A1,A2,B1,B2) = (1,0,1,2): in-block positions follow value_A*d+value_B
    const PolytopeGenerator g3 = generator({1, 0, 1, 2}, 3);
    CHECK(one_positions(g3, 3) == std::array<int, 4>{4, 5, 1, 2});
}

TEST_CASE("generator: rejects out-of-range strategy values") {
    CHECK_THROWS_AS(generator({0, 0, 0, 3}, 3), std::invalid_argument);
    CHECK_THROWS_AS(generator({-1, 0, 0, 0}, 3), std::invalid_argument);
}

TEST_CASE("generator: injective over all strategies") {
    for (int d : {2, 3, 4}) {
        std::set<std::array<int, 4>> images;
        for (const auto& s : enumerate_strategies(d))
            images.insert(one_positions(generator(s, d), d));
        CHECK(images.size() == static_cast<std::size_t>(d) * d * d * d);
    }
}

TEST_CASE("generator inner products reproduce strategy values exhaustively") {
    for (const BellCoefficients& c :
         {build_chsh(), build_cglmp(2), build_cglmp(3), build_slk(3, {0.25, -0.5, 0.5})}) {
        const int d = c.d();
        // epsilon arranged in the same 4-block layout: block (a,b) entry k*d+l
        // holds epsilon_ab((k-l) mod d)
        std::vector<double> eps_vec(static_cast<std::size_t>(4) * d * d);
        for (int ab = 0; ab < 4; ++ab)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l)
                    eps_vec[static_cast<std::size_t>(ab) * d * d + k * d + l] =
                        c.epsilon(ab / 2, ab % 2, ((k - l) % d + d) % d).real();
        for (const auto& s : enumerate_strategies(d)) {
            const PolytopeGenerator g = generator(s, d);
            double dot = 0.0;
            for (std::size_t i = 0; i < eps_vec.size(); ++i)
                dot += g.vec[i] * eps_vec[i];
            CHECK(std::abs(dot - strategy_value(s, c)) < 1e-12);
        }
    }
}

TEST_CASE("condition T1 holds for named families and random real tables") {
    CHECK(condition_t1(build_cglmp(3)));
    CHECK(condition_t1(build_slk(3, {0.25, -0.5, 0.5})));
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    CoeffTable eps(4 * 3);
    for (auto& e : eps) e = uni(rng);
    CHECK(condition_t1(BellCoefficients::from_probability(3, eps)));
}

TEST_CASE("tightness: CGLMP is tight for d = 2..5") {
    for (int d = 2; d <= 5; ++d) {
        const TightnessVerdict v = tightness(build_cglmp(d));
        CHECK(v.h == 4 * d * (d - 1));
        CHECK(v.rank >= v.h);
        CHECK(v.is_tight);
        CHECK(v.lr_bound == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(v.rank <= std::min(v.maximizer_count, 4 * d * d));
    }
}

TEST_CASE("tightness: optimal SLK has exactly 4d independent generators") {
    for (int d = 2; d <= 6; ++d) {
        for (double e1 : {0.5, -0.5})
            for (double e2 : {0.5, -0.5}) {
                const TightnessVerdict v = tightness(build_slk(d, {0.25, e1, e2}));
                CHECK(v.maximizer_count == 4 * d);
                CHECK(v.rank == 4 * d);
                // 4d < h = 4d(d-1) only from d = 3 on; at d = 2 the optimal
                // SLK coincides with CHSH up to scale and is a facet.
                CHECK(v.is_tight == (d == 2));
            }
    }
}

TEST_CASE("tightness: d=3 spot values match the rank bookkeeping") {
    const TightnessVerdict cglmp = tightness(build_cglmp(3));
    CHECK(cglmp.rank >= 24);
    const TightnessVerdict slk = tightness(build_slk(3, {0.25, -0.5, 0.5}));
    CHECK(slk.rank == 12);
    CHECK(slk.h == 24);
}

TEST_CASE("tightness: degenerate diagonal-only functional at delta = 0") {
    // At delta = 0 the off-diagonal blocks vanish and the maximizers are the
    // d^2 strategies (x, y, x, y); their generators span only d^2 directions.
    for (int d : {2, 3}) {
        const TightnessVerdict v = tightness(build_slk(d, {0.0, 0.5, 0.5}));
        CHECK(v.maximizer_count == d * d);
        CHECK(v.rank == d * d);
        CHECK(v.lr_bound == doctest::Approx(d - 1.0).epsilon(1e-12));
    }
}

TEST_CASE("tightness: dimension guard") {
    CHECK_THROWS_AS(tightness(build_cglmp(13)), std::invalid_argument);
}

TEST_CASE("slk_maximizer_families: the four canonical residue quadruples") {
    const auto f3 = slk_maximizer_families(3);
    CHECK(f3[0] == std::array<int, 4>{0, 0, 2, 2});
    CHECK(f3[1] == std::array<int, 4>{0, 0, 0, 0});
    CHECK(f3[2] == std::array<int, 4>{0, 1, 2, 0});
    CHECK(f3[3] == std::array<int, 4>{2, 0, 2, 0});

    const auto f2 = slk_maximizer_families(2);
    CHECK(f2[0] == std::array<int, 4>{0, 0, 1, 1});
    CHECK(f2[1] == std::array<int, 4>{0, 0, 0, 0});
    CHECK(f2[2] == std::array<int, 4>{0, 1, 1, 0});
    CHECK(f2[3] == std::array<int, 4>{1, 0, 1, 0});

    for (int d : {2, 3, 5, 8})
        for (const auto& q : slk_maximizer_families(d))
            CHECK((q[0] + q[3]) % d == (q[1] + q[2]) % d);
}

TEST_CASE("optimal SLK maximizers realize the four displayed generator patterns") {
    // per family quadruple (a11,a12,a21,a22), the generator blocks are
    // (A, A-a11), (A, A-a12), (A-a12+a22, A-a11), (A-a11+a21, A-a12)
    const int d = 3;
    const auto lr = lr_bound(build_slk(d, {0.25, -0.5, 0.5}));
    REQUIRE(lr.maximizers.size() == 12);
    for (const auto& s : lr.maximizers) {
        const auto a = strategy_residues(s, d);
        const int A = s.a1;
        auto mod = [d](int x) { return (x % d + d) % d; };
        const std::array<int, 4> expected = {
            A * d + mod(A - a[0]), A * d + mod(A - a[1]),
            mod(A - a[1] + a[3]) * d + mod(A - a[0]),
            mod(A - a[0] + a[2]) * d + mod(A - a[1])};
        CHECK(one_positions(generator(s, d), d) == expected);
    }
}

TEST_CASE("slk_maximizer_families: equal to the enumerated maximizer residues") {
    for (int d = 2; d <= 6; ++d) {
        const auto families = slk_maximizer_families(d);
        const std::set<std::array<int, 4>> expected(families.begin(), families.end());
        CHECK(maximizer_residues(build_slk(d, {0.25, -0.5, 0.5})) == expected);
    }
}

TEST_CASE("CGLMP maximizers satisfy the residue identity") {
    for (int d = 2; d <= 6; ++d) {
        for (const auto& s : lr_bound(build_cglmp(d)).maximizers) {
            const auto a = strategy_residues(s, d);
            const int dotted = ((a[1] - 1) % d + d) % d;
            CHECK(a[0] + a[3] - dotted - a[2] + d - 1 == 0);
        }
    }
}
