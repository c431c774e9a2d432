#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "varseg/types.hpp"

namespace varseg {

/// Recipe for a piecewise-constant test matrix: one constant level per
/// (row, segment) plus seeded Gaussian noise. Identical specs produce
/// bit-identical matrices.
struct SynthSpec {
    std::size_t n = 0;
    std::size_t m_rows = 0;
    Segmentation true_boundaries;
    std::vector<std::vector<double>> level_matrix; // m_rows x segment count
    double noise_sigma = 0.0;
    std::uint64_t seed = 0;
};

/// Seeded standard-normal sampler built from fully specified pieces so
/// runs reproduce exactly: mt19937_64 raw draws, uniforms in (0, 1] via
/// ((x >> 11) + 1) * 2^-53, and the Box-Muller transform
/// sqrt(-2 ln u1) * cos(2 pi u2), consuming two draws per sample.
class GaussianSampler {
public:
    explicit GaussianSampler(std::uint64_t seed) : rng_(seed) {}

    double operator()();

private:
    std::mt19937_64 rng_;
};

/// Builds the matrix described by the spec. Rows are generated in
/// order, samples left to right; noise is drawn only when
/// noise_sigma > 0. Throws std::invalid_argument on shape mismatches.
SignalMatrix generate(const SynthSpec& spec);

/// Spec of the built-in benchmark: one row of 100 samples with five
/// alternating plateaus (low / high / low / high / low) and mild seeded
/// noise. The noiseless variant is this spec with noise_sigma = 0.
SynthSpec benchmark_signal_spec();

/// generate(benchmark_signal_spec())
SignalMatrix benchmark_signal();

} // namespace varseg
