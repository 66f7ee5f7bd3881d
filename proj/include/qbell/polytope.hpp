#pragma once

#include <array>
#include <vector>

#include "qbell/coefficients.hpp"
#include "qbell/local_realism.hpp"

namespace qbell {

/// Rank analysis works on 4d^2-dimensional vectors; 4*12^2 = 576 keeps the
/// elimination instant even in the degenerate all-maximizer case.
inline constexpr int kMaxTightnessDim = 12;

/// 0/1 joint-probability vector of one deterministic strategy: the
/// concatenation |A1,B1> (+) |A1,B2> (+) |A2,B1> (+) |A2,B2>, each block of
/// length d^2 with a single 1 at (value_A * d + value_B).
struct PolytopeGenerator {
    DeterministicStrategy strategy;
    std::vector<double> vec; // length 4*d^2
};

/// Throws std::invalid_argument when a strategy value lies outside [0, d).
PolytopeGenerator generator(const DeterministicStrategy& s, int d);

/// Executable form of the half-space condition: every deterministic strategy
/// value is <= lr_bound + 1e-9. True by construction of lr_bound; kept as a
/// checked theorem.
bool condition_t1(const BellCoefficients& c);

struct TightnessVerdict {
    bool is_tight = false;
    int rank = 0;            // linear rank of the bound-achieving generators
    int h = 0;               // 4d(d-1)
    int maximizer_count = 0;
    double lr_bound = 0.0;
};

/// Collects the bound-achieving strategies, maps them to generators and
/// computes the numerical rank (Gaussian elimination, pivot threshold 1e-9
/// relative to the largest entry). Tight iff rank >= h = 4d(d-1).
TightnessVerdict tightness(const BellCoefficients& c);

/// Rank of a set of generator vectors under the same elimination rule used
/// by tightness().
int generator_rank(const std::vector<PolytopeGenerator>& gens);

/// The four residue quadruples (alpha_11, alpha_12, alpha_21, alpha_22) that
/// achieve the optimal-SLK bound: {0,0,d-1,d-1}, {0,0,0,0}, {0,1,d-1,0},
/// {d-1,0,d-1,0}. These are the maximizer families of the default
/// (eta1, eta2) = (-1/2, +1/2) variant at delta = 1/4.
std::array<std::array<int, 4>, 4> slk_maximizer_families(int d);

} // namespace qbell
