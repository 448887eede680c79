#pragma once

#include <map>

#include "coherent/rational.hpp"

namespace coherent {

// Tiling of the phase plane by cells of area h/2: two sheets of tiles per
// fundamental domain, one per spin state.
struct TilingModel {
    Rat h = 1;
    Rat tile_width = 1;
    Rat tile_height() const { return h / 2 / tile_width; }
};
TilingModel make_tiling(const Rat& h, const Rat& tile_width);  // validates > 0

enum class Sheet { Top, Bottom };

struct WalkerState {
    long long cell = 0;
    Sheet sheet = Sheet::Top;
    bool on_edge = false;
};

// Translation moves the cell index only; the spin sheet never changes.
WalkerState translate(const WalkerState& w, long long delta);

struct PlanePoint {
    Rat q, p;
    int multiplicity;  // 2 for interior points (one per sheet), 1 on edges
};

// Tile-center coordinates of the walker's cell; edge states project to the
// shared right edge midpoint with multiplicity 1.
PlanePoint project_to_plane(const TilingModel& m, const WalkerState& w);

// probability = (drift + 1) / 2; drift must lie in [-1, 1].
Rat probability_from_drift(const Rat& drift);
Rat drift_from_probability(const Rat& prob);  // 2p - 1, p in [0, 1]

// Probability distribution on the lattice (1/denominator) Z, exact.
struct LatticeDistribution {
    long long denominator = 1;
    std::map<long long, Rat> pmf;  // key k means position k / denominator

    Rat total() const;
    Rat mean() const;
    Rat variance() const;
};

// T-step nearest-neighbor walk from the origin: position 2k - T with
// probability C(T, k) p^k (1-p)^(T-k), all exact.
LatticeDistribution exact_walk_pmf(int steps, const Rat& prob);

// Distribution of the mean of `cells` independent walks (exact
// convolution); positions live on (1/cells) Z.  Guard: steps * cells.
LatticeDistribution n_cell_mean_pmf(int steps, const Rat& prob, int cells);

struct WalkParams {
    int steps = 1;
    Rat prob = Rat(1, 2);
    int cells = 1;
    unsigned long long seed = 0;
};

// Empirical distribution over `trials` runs.  Deterministic: trial t draws
// from std::mt19937_64 seeded with mix64(seed xor t) where mix64 is the
// splitmix64 finalizer; each draw maps the top 53 engine bits to [0, 1)
// and steps right iff the draw is below prob.  All `cells` walks of a
// trial consume the same trial stream in order.
LatticeDistribution monte_carlo_walk(const WalkParams& params, long long trials);

struct GaussianReport {
    double mean = 0;
    double sigma = 0;
    double sup_gap = 0;            // sup_x |CDF_walk(x) - CDF_gauss(x)|
    double sup_gap_within_2sigma = 0;
    double gaussian_tail_outside_cone = 0;  // Gaussian mass at |x| > steps
    Rat walk_tail_outside_cone = 0;         // exactly zero
};

// Exact walk CDF against the matched Gaussian.  The sup gaps are evaluated
// at every atom (both one-sided limits) and at the 2-sigma window edges.
// Errors: DegenerateVariance when prob is 0 or 1.
GaussianReport gaussian_compare(int steps, const Rat& prob);

}
