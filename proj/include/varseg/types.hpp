#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace varseg {

/// Dense matrix of recorded runtime values. Rows are signals (one per
/// recorded process), columns are time-ordered samples. Immutable after
/// construction and safe to share across threads.
class SignalMatrix {
public:
    SignalMatrix(std::vector<double> values, std::size_t rows, std::size_t cols,
                 std::vector<std::string> row_labels = {});

    static SignalMatrix from_rows(const std::vector<std::vector<double>>& rows,
                                  std::vector<std::string> row_labels = {});

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double operator()(std::size_t row, std::size_t col) const {
        return values_[row * cols_ + col];
    }

    std::span<const double> row(std::size_t row) const {
        return {values_.data() + row * cols_, cols_};
    }

    const std::vector<double>& values() const noexcept { return values_; }
    const std::vector<std::string>& row_labels() const noexcept { return row_labels_; }

private:
    std::vector<double> values_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::string> row_labels_;
};

/// A split of [0, n) into contiguous half-open segments. The interior
/// boundaries are strictly increasing 0-based indices in [1, n-1];
/// segment h covers [boundary(h-1), boundary(h)) with implicit outer
/// boundaries 0 and n. boundaries.size() + 1 segments in total.
struct Segmentation {
    std::vector<std::size_t> boundaries;
    std::size_t n = 0;

    std::size_t segment_count() const noexcept { return boundaries.size() + 1; }

    std::size_t segment_start(std::size_t h) const {
        return h == 0 ? 0 : boundaries[h - 1];
    }

    std::size_t segment_end(std::size_t h) const {
        return h == boundaries.size() ? n : boundaries[h];
    }

    bool operator==(const Segmentation&) const = default;
};

/// Outcome of one optimizer run. `iterations` counts outer-loop passes
/// for the greedy optimizer and evaluated combinations for the
/// exhaustive one. `objective_trace` holds the objective after each
/// accepted improvement and is non-increasing; `objective` equals its
/// last entry, or the initial objective when nothing improved.
struct SegmentationResult {
    Segmentation segmentation;
    double objective = 0.0;
    std::uint64_t iterations = 0;
    std::vector<double> objective_trace;
    std::chrono::duration<double> elapsed{0.0};
};

/// Checks all Segmentation invariants against a sample count.
/// Returns std::nullopt when valid, otherwise the first violated rule.
std::optional<std::string> validate_segmentation(const Segmentation& seg, std::size_t n);

/// Splits [0, n) into s segments whose lengths differ by at most one;
/// boundary h sits at round(h*n/s). Throws std::invalid_argument when
/// s < 1 or s > n.
Segmentation uniform_presegmentation(std::size_t n, std::size_t s);

} // namespace varseg
