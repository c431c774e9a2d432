#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "varseg/types.hpp"

namespace varseg {

/// Population variance of one row: mean squared deviation from the row
/// mean (denominator = row length). Throws std::invalid_argument on an
/// empty row.
double row_variance(std::span<const double> row);

/// Sum over rows of each row's population variance.
double matrix_variance(const SignalMatrix& m);

/// The segmentation objective: sum over segments and rows of the
/// population variance of the row restricted to the segment. Computed
/// with the two-pass reference path. Equals matrix_variance for a
/// single-segment split. Throws std::invalid_argument when the
/// segmentation is invalid for the matrix.
double segmented_variance(const SignalMatrix& m, const Segmentation& seg);

/// Per-row cumulative sums and sums of squares with a leading zero
/// entry, enabling O(1) range-variance queries. Immutable once built.
class PrefixStats {
public:
    explicit PrefixStats(const SignalMatrix& m);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t samples() const noexcept { return samples_; }

    double cum_sum(std::size_t row, std::size_t j) const {
        return sums_[row * (samples_ + 1) + j];
    }

    double cum_sq(std::size_t row, std::size_t j) const {
        return squares_[row * (samples_ + 1) + j];
    }

    double range_sum(std::size_t row, std::size_t lo, std::size_t hi) const {
        return cum_sum(row, hi) - cum_sum(row, lo);
    }

    double range_sq(std::size_t row, std::size_t lo, std::size_t hi) const {
        return cum_sq(row, hi) - cum_sq(row, lo);
    }

private:
    std::vector<double> sums_;
    std::vector<double> squares_;
    std::size_t rows_ = 0;
    std::size_t samples_ = 0;
};

PrefixStats build_prefix_stats(const SignalMatrix& m);

/// Population variance of values[row][lo..hi) from prefix stats via
/// sum(x^2) - sum(x)^2/len, all over len. Tiny negative results from
/// cancellation are clamped to 0. Throws std::invalid_argument when
/// lo >= hi or the query is out of range.
double segment_variance_fast(const PrefixStats& ps, std::size_t row, std::size_t lo, std::size_t hi);

/// Mean of values[row][lo..hi) from prefix stats.
double segment_mean_fast(const PrefixStats& ps, std::size_t row, std::size_t lo, std::size_t hi);

/// Full objective evaluated through the prefix-stat fast path.
double segmented_variance_fast(const PrefixStats& ps, const Segmentation& seg);

} // namespace varseg
