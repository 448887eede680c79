#include "coherent/walk.hpp"

#include <cmath>
#include <random>

#include "coherent/errors.hpp"

namespace coherent {

namespace {

constexpr long long kConvolutionGuard = 20000;  // steps * cells

unsigned long long mix64(unsigned long long z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

void check_prob(const Rat& p) {
    if (p < 0 || p > 1)
        throw DomainError("DriftOutOfRange", "probability must lie in [0, 1]",
                          {{"prob", rational_string(p)}});
}

void check_steps(int steps) {
    if (steps < 0)
        throw DomainError("NonpositiveParameter", "steps must be nonnegative",
                          {{"steps", std::to_string(steps)}});
}

double gauss_cdf(double x, double mean, double sigma) {
    return 0.5 * std::erfc(-(x - mean) / (sigma * std::sqrt(2.0)));
}

}  // namespace

TilingModel make_tiling(const Rat& h, const Rat& tile_width) {
    if (h <= 0 || tile_width <= 0)
        throw DomainError("NonpositiveParameter",
                          "h and tile_width must be positive",
                          {{"h", rational_string(h)},
                           {"tile_width", rational_string(tile_width)}});
    return {h, tile_width};
}

WalkerState translate(const WalkerState& w, long long delta) {
    return {w.cell + delta, w.sheet, w.on_edge};
}

PlanePoint project_to_plane(const TilingModel& m, const WalkerState& w) {
    const Rat height = m.tile_height();
    if (w.on_edge)
        return {Rat(w.cell + 1) * m.tile_width, height / 2, 1};
    return {(Rat(w.cell) + Rat(1, 2)) * m.tile_width, height / 2, 2};
}

Rat probability_from_drift(const Rat& drift) {
    if (drift < -1 || drift > 1)
        throw DomainError("DriftOutOfRange", "drift must lie in [-1, 1]",
                          {{"drift", rational_string(drift)}});
    return (drift + 1) / 2;
}

Rat drift_from_probability(const Rat& prob) {
    check_prob(prob);
    return 2 * prob - 1;
}

Rat LatticeDistribution::total() const {
    Rat s = 0;
    for (const auto& [k, p] : pmf) s += p;
    return s;
}

Rat LatticeDistribution::mean() const {
    Rat s = 0;
    for (const auto& [k, p] : pmf) s += Rat(k) * p;
    return s / Rat(denominator);
}

Rat LatticeDistribution::variance() const {
    const Rat m = mean();
    Rat s = 0;
    for (const auto& [k, p] : pmf) {
        const Rat x = Rat(k) / Rat(denominator);
        s += (x - m) * (x - m) * p;
    }
    return s;
}

LatticeDistribution exact_walk_pmf(int steps, const Rat& prob) {
    check_steps(steps);
    check_prob(prob);
    LatticeDistribution d;
    d.denominator = 1;
    // Binomial coefficients by the Pascal recurrence, exactly.
    Int binom = 1;
    for (int k = 0; k <= steps; ++k) {
        Rat mass = Rat(binom);
        // p^k (1-p)^(T-k); zero powers of a zero base handled explicitly.
        for (int i = 0; i < k; ++i) mass *= prob;
        for (int i = 0; i < steps - k; ++i) mass *= 1 - prob;
        if (mass != 0) d.pmf[2LL * k - steps] = mass;
        binom = binom * (steps - k) / (k + 1);
    }
    return d;
}

LatticeDistribution n_cell_mean_pmf(int steps, const Rat& prob, int cells) {
    check_steps(steps);
    check_prob(prob);
    if (cells < 1)
        throw DomainError("NonpositiveParameter", "cells must be at least 1",
                          {{"cells", std::to_string(cells)}});
    if (static_cast<long long>(steps) * cells > kConvolutionGuard)
        throw DomainError("TooLarge", "steps * cells exceeds the convolution guard",
                          {{"steps", std::to_string(steps)},
                           {"cells", std::to_string(cells)},
                           {"guard", std::to_string(kConvolutionGuard)}});
    const LatticeDistribution single = exact_walk_pmf(steps, prob);
    std::map<long long, Rat> acc{{0, Rat(1)}};
    for (int c = 0; c < cells; ++c) {
        std::map<long long, Rat> next;
        for (const auto& [s, ps] : acc)
            for (const auto& [x, px] : single.pmf) next[s + x] += ps * px;
        acc = std::move(next);
    }
    LatticeDistribution d;
    d.denominator = cells;
    d.pmf = std::move(acc);
    return d;
}

LatticeDistribution monte_carlo_walk(const WalkParams& params, long long trials) {
    check_steps(params.steps);
    check_prob(params.prob);
    if (params.cells < 1)
        throw DomainError("NonpositiveParameter", "cells must be at least 1");
    if (trials < 1)
        throw DomainError("NonpositiveParameter", "need at least one trial");
    const double p = as_double(params.prob);
    std::map<long long, long long> counts;
    for (long long t = 0; t < trials; ++t) {
        std::mt19937_64 eng(mix64(params.seed ^ static_cast<unsigned long long>(t)));
        long long sum = 0;
        for (int c = 0; c < params.cells; ++c) {
            long long pos = 0;
            for (int s = 0; s < params.steps; ++s) {
                const double u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
                pos += u < p ? 1 : -1;
            }
            sum += pos;
        }
        ++counts[sum];
    }
    LatticeDistribution d;
    d.denominator = params.cells;
    for (const auto& [k, c] : counts) d.pmf[k] = Rat(c, trials);
    return d;
}

GaussianReport gaussian_compare(int steps, const Rat& prob) {
    check_steps(steps);
    check_prob(prob);
    if (prob == 0 || prob == 1)
        throw DomainError("DegenerateVariance",
                          "deterministic walks have no Gaussian comparison",
                          {{"prob", rational_string(prob)}});
    const LatticeDistribution d = exact_walk_pmf(steps, prob);

    GaussianReport rep;
    const Rat mean = d.mean();
    const Rat var = d.variance();
    rep.mean = as_double(mean);
    rep.sigma = std::sqrt(as_double(var));

    // CDF gap at every atom, from the left and from the right.
    const double lo = rep.mean - 2.0 * rep.sigma;
    const double hi = rep.mean + 2.0 * rep.sigma;
    Rat cdf = 0;
    double prev_cdf = 0.0;
    double cdf_left_of_lo = 0.0;  // walk CDF just left of the window
    double cdf_at_hi = 0.0;       // walk CDF at the last atom inside it
    for (const auto& [k, mass] : d.pmf) {
        const double x = static_cast<double>(k);
        const double phi = gauss_cdf(x, rep.mean, rep.sigma);
        cdf += mass;
        const double here = as_double(cdf);
        rep.sup_gap = std::max({rep.sup_gap, std::abs(prev_cdf - phi),
                                std::abs(here - phi)});
        if (x >= lo && x <= hi)
            rep.sup_gap_within_2sigma =
                std::max({rep.sup_gap_within_2sigma, std::abs(prev_cdf - phi),
                          std::abs(here - phi)});
        if (x < lo) cdf_left_of_lo = here;
        if (x <= hi) cdf_at_hi = here;
        prev_cdf = here;
    }
    // Window edges: the walk CDF is flat there, the Gaussian is not.
    rep.sup_gap_within_2sigma =
        std::max({rep.sup_gap_within_2sigma,
                  std::abs(cdf_left_of_lo - gauss_cdf(lo, rep.mean, rep.sigma)),
                  std::abs(cdf_at_hi - gauss_cdf(hi, rep.mean, rep.sigma))});
    rep.sup_gap = std::max(rep.sup_gap, rep.sup_gap_within_2sigma);

    rep.gaussian_tail_outside_cone =
        gauss_cdf(-static_cast<double>(steps), rep.mean, rep.sigma) +
        (1.0 - gauss_cdf(static_cast<double>(steps), rep.mean, rep.sigma));
    rep.walk_tail_outside_cone = 0;  // support is exactly [-steps, steps]
    return rep;
}

}
