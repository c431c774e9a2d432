#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "varseg/types.hpp"

namespace varseg {

struct PreprocessConfig {
    /// Fraction of the largest peak-to-valley value a row must exceed to
    /// survive the filter, in (0, 1].
    double ptv_fraction = 0.6;
    /// Return kept rows at their original signal range instead of
    /// offset-reduced.
    bool restore_offsets = true;
};

/// What the preprocessing pipeline did: per-row offsets and
/// peak-to-valley values for all input rows, the absolute cutoff, and
/// the indices of surviving rows in original order.
struct PreprocessReport {
    std::vector<double> offsets;
    std::vector<double> ptv;
    std::vector<std::size_t> kept_rows;
    double threshold = 0.0;
};

/// Shifts every row so its minimum is exactly 0. Returns the shifted
/// matrix and the per-row constants that were subtracted.
std::pair<SignalMatrix, std::vector<double>> offset_reduce(const SignalMatrix& m);

/// Keeps rows whose peak-to-valley value (max - min) strictly exceeds
/// ptv_fraction times the largest peak-to-valley value; rows attaining
/// the maximum are always kept. Throws DataError when every row is
/// constant, std::invalid_argument on a bad config.
std::pair<SignalMatrix, PreprocessReport> peak_to_valley_filter(const SignalMatrix& m,
                                                                const PreprocessConfig& cfg);

} // namespace varseg
