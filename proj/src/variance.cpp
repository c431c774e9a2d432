#include "varseg/variance.hpp"

#include <stdexcept>

namespace varseg {

namespace {

double range_variance_two_pass(std::span<const double> row, std::size_t lo, std::size_t hi) {
    const std::size_t len = hi - lo;
    double sum = 0.0;
    for (std::size_t j = lo; j < hi; ++j) {
        sum += row[j];
    }
    const double mean = sum / static_cast<double>(len);
    double acc = 0.0;
    for (std::size_t j = lo; j < hi; ++j) {
        const double d = row[j] - mean;
        acc += d * d;
    }
    return acc / static_cast<double>(len);
}

} // namespace

double row_variance(std::span<const double> row) {
    if (row.empty()) {
        throw std::invalid_argument("empty input");
    }
    return range_variance_two_pass(row, 0, row.size());
}

double matrix_variance(const SignalMatrix& m) {
    double total = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        total += row_variance(m.row(i));
    }
    return total;
}

double segmented_variance(const SignalMatrix& m, const Segmentation& seg) {
    if (auto violation = validate_segmentation(seg, m.cols())) {
        throw std::invalid_argument(*violation);
    }
    double total = 0.0;
    for (std::size_t h = 0; h < seg.segment_count(); ++h) {
        const std::size_t lo = seg.segment_start(h);
        const std::size_t hi = seg.segment_end(h);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            total += range_variance_two_pass(m.row(i), lo, hi);
        }
    }
    return total;
}

PrefixStats::PrefixStats(const SignalMatrix& m) : rows_(m.rows()), samples_(m.cols()) {
    const std::size_t stride = samples_ + 1;
    sums_.assign(rows_ * stride, 0.0);
    squares_.assign(rows_ * stride, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        const auto row = m.row(i);
        double s = 0.0;
        double q = 0.0;
        for (std::size_t j = 0; j < samples_; ++j) {
            s += row[j];
            q += row[j] * row[j];
            sums_[i * stride + j + 1] = s;
            squares_[i * stride + j + 1] = q;
        }
    }
}

PrefixStats build_prefix_stats(const SignalMatrix& m) {
    return PrefixStats(m);
}

double segment_variance_fast(const PrefixStats& ps, std::size_t row, std::size_t lo, std::size_t hi) {
    if (lo >= hi) {
        throw std::invalid_argument("empty segment query");
    }
    if (row >= ps.rows() || hi > ps.samples()) {
        throw std::invalid_argument("segment query out of range");
    }
    const double len = static_cast<double>(hi - lo);
    const double sum = ps.range_sum(row, lo, hi);
    const double sq = ps.range_sq(row, lo, hi);
    const double variance = (sq - sum * sum / len) / len;
    return variance < 0.0 ? 0.0 : variance;
}

double segment_mean_fast(const PrefixStats& ps, std::size_t row, std::size_t lo, std::size_t hi) {
    if (lo >= hi) {
        throw std::invalid_argument("empty segment query");
    }
    if (row >= ps.rows() || hi > ps.samples()) {
        throw std::invalid_argument("segment query out of range");
    }
    return ps.range_sum(row, lo, hi) / static_cast<double>(hi - lo);
}

double segmented_variance_fast(const PrefixStats& ps, const Segmentation& seg) {
    if (auto violation = validate_segmentation(seg, ps.samples())) {
        throw std::invalid_argument(*violation);
    }
    double total = 0.0;
    for (std::size_t h = 0; h < seg.segment_count(); ++h) {
        const std::size_t lo = seg.segment_start(h);
        const std::size_t hi = seg.segment_end(h);
        for (std::size_t i = 0; i < ps.rows(); ++i) {
            total += segment_variance_fast(ps, i, lo, hi);
        }
    }
    return total;
}

} // namespace varseg
