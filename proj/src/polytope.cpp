#include "qbell/polytope.hpp"

#include <cmath>
#include <stdexcept>

namespace qbell {
namespace {

void check_tightness_dim(int d) {
    if (d < 2) throw std::invalid_argument("local dimension must be at least 2");
    if (d > kMaxTightnessDim)
        throw std::invalid_argument("tightness analysis supports d <= " +
                                    std::to_string(kMaxTightnessDim));
}

// Streaming row reduction: keeps only the pivot rows, so memory stays
// O(rank * 4d^2) even when every strategy maximizes.
class RankAccumulator {
public:
    explicit RankAccumulator(std::size_t cols, double pivot_threshold)
        : cols_(cols), threshold_(pivot_threshold) {}

    void add_row(std::vector<double> row) {
        for (const auto& pivot : pivots_) {
            const double factor = row[pivot.col];
            if (factor == 0.0) continue;
            for (std::size_t j = 0; j < cols_; ++j)
                row[j] -= factor * pivot.row[j];
        }
        std::size_t best = cols_;
        double best_mag = threshold_;
        for (std::size_t j = 0; j < cols_; ++j)
            if (std::abs(row[j]) > best_mag) {
                best_mag = std::abs(row[j]);
                best = j;
            }
        if (best == cols_) return; // row reduced to (numerical) zero
        const double inv = 1.0 / row[best];
        for (std::size_t j = 0; j < cols_; ++j) row[j] *= inv;
        pivots_.push_back({best, std::move(row)});
    }

    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    struct Pivot {
        std::size_t col;
        std::vector<double> row;
    };
    std::size_t cols_;
    double threshold_;
    std::vector<Pivot> pivots_;
};

} // namespace

PolytopeGenerator generator(const DeterministicStrategy& s, int d) {
    if (d < 2) throw std::invalid_argument("local dimension must be at least 2");
    for (int v : {s.a1, s.a2, s.b1, s.b2})
        if (v < 0 || v >= d)
            throw std::invalid_argument("strategy outcome out of range [0, d)");

    PolytopeGenerator g;
    g.strategy = s;
    g.vec.assign(static_cast<std::size_t>(4) * d * d, 0.0);
    const int pairs[4][2] = {{s.a1, s.b1}, {s.a1, s.b2}, {s.a2, s.b1}, {s.a2, s.b2}};
    for (int block = 0; block < 4; ++block) {
        const int a = ((pairs[block][0] % d) + d) % d;
        const int b = ((pairs[block][1] % d) + d) % d;
        g.vec[static_cast<std::size_t>(block) * d * d + a * d + b] = 1.0;
    }
    return g;
}

bool condition_t1(const BellCoefficients& c) {
    const LrBoundResult lr = lr_bound(c);
    for (const auto& s : enumerate_strategies(c.d()))
        if (strategy_value(s, c) > lr.bound + 1e-9) return false;
    return true;
}

int generator_rank(const std::vector<PolytopeGenerator>& gens) {
    if (gens.empty()) return 0;
    // Entries are 0/1, so the largest initial entry is 1 and the relative
    // pivot threshold is just 1e-9.
    RankAccumulator acc(gens.front().vec.size(), 1e-9);
    for (const auto& g : gens) acc.add_row(g.vec);
    return acc.rank();
}

TightnessVerdict tightness(const BellCoefficients& c) {
    const int d = c.d();
    check_tightness_dim(d);

    const LrBoundResult lr = lr_bound(c);
    RankAccumulator acc(static_cast<std::size_t>(4) * d * d, 1e-9);
    for (const auto& s : lr.maximizers) acc.add_row(generator(s, d).vec);

    TightnessVerdict verdict;
    verdict.rank = acc.rank();
    verdict.h = 4 * d * (d - 1);
    verdict.maximizer_count = static_cast<int>(lr.maximizers.size());
    verdict.lr_bound = lr.bound;
    verdict.is_tight = verdict.rank >= verdict.h;
    return verdict;
}

std::array<std::array<int, 4>, 4> slk_maximizer_families(int d) {
    if (d < 2) throw std::invalid_argument("local dimension must be at least 2");
    return {{{0, 0, d - 1, d - 1}, {0, 0, 0, 0}, {0, 1, d - 1, 0}, {d - 1, 0, d - 1, 0}}};
}

} // namespace qbell
