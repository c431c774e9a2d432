#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "varseg/synth.hpp"

namespace varseg::testsupport {

struct InstanceParams {
    std::size_t min_n = 8;
    std::size_t max_n = 40;
    std::size_t max_rows = 3;
    std::size_t min_s = 2;
    std::size_t max_s = 4;
    double sigma_lo = 0.0;
    double sigma_hi = 0.0;
};

struct RandomInstance {
    SynthSpec spec;
    SignalMatrix matrix;
};

// Uniformly random strictly increasing boundaries.
inline Segmentation random_segmentation(std::mt19937_64& rng, std::size_t n, std::size_t s) {
    std::vector<std::size_t> positions(n - 1);
    std::iota(positions.begin(), positions.end(), std::size_t{1});
    std::shuffle(positions.begin(), positions.end(), rng);
    std::vector<std::size_t> bounds(positions.begin(), positions.begin() + (s - 1));
    std::sort(bounds.begin(), bounds.end());
    return Segmentation{std::move(bounds), n};
}

// Boundaries on the even grid, each displaced by at most jitter_frac of
// the grid spacing. Keeps every segment non-empty.
inline Segmentation grid_jittered_boundaries(std::mt19937_64& rng, std::size_t n, std::size_t s,
                                             double jitter_frac) {
    const Segmentation grid = uniform_presegmentation(n, s);
    const double spacing = static_cast<double>(n) / static_cast<double>(s);
    const long jitter = std::max<long>(0, static_cast<long>(spacing * jitter_frac));
    std::uniform_int_distribution<long> offset(-jitter, jitter);
    std::vector<std::size_t> bounds;
    long prev = 0;
    for (std::size_t h = 0; h < grid.boundaries.size(); ++h) {
        long x = static_cast<long>(grid.boundaries[h]) + offset(rng);
        const long hi = static_cast<long>(n) - static_cast<long>(grid.boundaries.size() - h);
        x = std::max(prev + 1, std::min(x, hi));
        bounds.push_back(static_cast<std::size_t>(x));
        prev = x;
    }
    return Segmentation{std::move(bounds), n};
}

// Fully random piecewise-constant instance: boundaries anywhere, levels
// on a 0.5 grid in [-8, 8] with distinct adjacent levels per row. The
// 0.5 grid keeps constant segments at exactly zero variance through the
// prefix-stat path when noise_sigma is 0.
inline RandomInstance random_step_instance(std::mt19937_64& rng, const InstanceParams& p) {
    std::uniform_int_distribution<std::size_t> n_dist(p.min_n, p.max_n);
    const std::size_t n = n_dist(rng);
    std::uniform_int_distribution<std::size_t> s_dist(p.min_s, std::min(p.max_s, n));
    const std::size_t s = s_dist(rng);
    std::uniform_int_distribution<std::size_t> rows_dist(1, p.max_rows);

    SynthSpec spec;
    spec.n = n;
    spec.m_rows = rows_dist(rng);
    spec.true_boundaries = random_segmentation(rng, n, s);

    std::uniform_int_distribution<int> level_dist(-16, 16);
    spec.level_matrix.resize(spec.m_rows);
    for (auto& levels : spec.level_matrix) {
        levels.resize(s);
        for (std::size_t h = 0; h < s; ++h) {
            double level;
            do {
                level = 0.5 * level_dist(rng);
            } while (h > 0 && level == levels[h - 1]);
            levels[h] = level;
        }
    }

    if (p.sigma_hi > 0.0) {
        std::uniform_real_distribution<double> sigma_dist(p.sigma_lo, p.sigma_hi);
        spec.noise_sigma = sigma_dist(rng);
    }
    spec.seed = rng();

    SignalMatrix matrix = generate(spec);
    return {std::move(spec), std::move(matrix)};
}

// Instance with plateaus of comparable duration (grid-jittered
// boundaries, displacement <= 15% of the spacing) and per-row two-level
// square-wave dynamics: a low level in [0, 6] and a high level in
// [10, 16], random phase. Adjacent levels are always distinct. On this
// family single-boundary descent from the uniform presegmentation
// reaches the exhaustive optimum; fully random placements
// (random_step_instance) admit local optima.
inline RandomInstance balanced_step_instance(std::mt19937_64& rng, const InstanceParams& p) {
    std::uniform_int_distribution<std::size_t> n_dist(p.min_n, p.max_n);
    const std::size_t n = n_dist(rng);
    std::uniform_int_distribution<std::size_t> s_dist(p.min_s, std::min(p.max_s, n));
    const std::size_t s = s_dist(rng);
    std::uniform_int_distribution<std::size_t> rows_dist(1, p.max_rows);

    SynthSpec spec;
    spec.n = n;
    spec.m_rows = rows_dist(rng);
    spec.true_boundaries = grid_jittered_boundaries(rng, n, s, 0.15);

    std::uniform_int_distribution<int> low_dist(0, 12);
    std::uniform_int_distribution<int> high_dist(20, 32);
    std::uniform_int_distribution<int> phase_dist(0, 1);
    spec.level_matrix.resize(spec.m_rows);
    for (auto& levels : spec.level_matrix) {
        levels.resize(s);
        const double low = 0.5 * low_dist(rng);
        const double high = 0.5 * high_dist(rng);
        const int phase = phase_dist(rng);
        for (std::size_t h = 0; h < s; ++h) {
            levels[h] = (static_cast<int>(h) + phase) % 2 == 0 ? low : high;
        }
    }

    if (p.sigma_hi > 0.0) {
        std::uniform_real_distribution<double> sigma_dist(p.sigma_lo, p.sigma_hi);
        spec.noise_sigma = sigma_dist(rng);
    }
    spec.seed = rng();

    SignalMatrix matrix = generate(spec);
    return {std::move(spec), std::move(matrix)};
}

// Matrix of iid values, for query and property tests.
inline SignalMatrix random_noise_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                        double lo, double hi) {
    std::uniform_real_distribution<double> value_dist(lo, hi);
    std::vector<double> values(rows * cols);
    for (auto& v : values) {
        v = value_dist(rng);
    }
    return SignalMatrix(std::move(values), rows, cols);
}

} // namespace varseg::testsupport
