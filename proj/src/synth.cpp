#include "varseg/synth.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace varseg {

double GaussianSampler::operator()() {
    // (x >> 11) + 1 maps the top 53 bits into [1, 2^53], so u1 lies in
    // (0, 1] and the logarithm is always finite.
    const double u1 = static_cast<double>((rng_() >> 11) + 1) * 0x1.0p-53;
    const double u2 = static_cast<double>((rng_() >> 11) + 1) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

SignalMatrix generate(const SynthSpec& spec) {
    if (spec.n < 1 || spec.m_rows < 1) {
        throw std::invalid_argument("spec must describe at least one row and one sample");
    }
    if (auto violation = validate_segmentation(spec.true_boundaries, spec.n)) {
        throw std::invalid_argument(*violation);
    }
    const std::size_t segments = spec.true_boundaries.segment_count();
    if (spec.level_matrix.size() != spec.m_rows) {
        throw std::invalid_argument("level matrix shape mismatch");
    }
    for (const auto& levels : spec.level_matrix) {
        if (levels.size() != segments) {
            throw std::invalid_argument("level matrix shape mismatch");
        }
    }
    if (spec.noise_sigma < 0.0) {
        throw std::invalid_argument("noise_sigma must be non-negative");
    }

    GaussianSampler noise(spec.seed);
    std::vector<double> values;
    values.reserve(spec.m_rows * spec.n);
    for (std::size_t i = 0; i < spec.m_rows; ++i) {
        for (std::size_t h = 0; h < segments; ++h) {
            const double level = spec.level_matrix[i][h];
            const std::size_t lo = spec.true_boundaries.segment_start(h);
            const std::size_t hi = spec.true_boundaries.segment_end(h);
            for (std::size_t j = lo; j < hi; ++j) {
                values.push_back(spec.noise_sigma > 0.0 ? level + spec.noise_sigma * noise()
                                                        : level);
            }
        }
    }
    return SignalMatrix(std::move(values), spec.m_rows, spec.n);
}

SynthSpec benchmark_signal_spec() {
    SynthSpec spec;
    spec.n = 100;
    spec.m_rows = 1;
    spec.true_boundaries = Segmentation{{18, 43, 61, 82}, 100};
    spec.level_matrix = {{15.0, 55.0, 5.0, 58.0, 25.0}};
    spec.noise_sigma = 2.0;
    spec.seed = 42;
    return spec;
}

SignalMatrix benchmark_signal() {
    return generate(benchmark_signal_spec());
}

} // namespace varseg
