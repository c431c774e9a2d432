#include "varseg/types.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace varseg {

SignalMatrix::SignalMatrix(std::vector<double> values, std::size_t rows, std::size_t cols,
                           std::vector<std::string> row_labels)
    : values_(std::move(values)), rows_(rows), cols_(cols), row_labels_(std::move(row_labels)) {
    if (rows_ < 1 || cols_ < 1) {
        throw std::invalid_argument("matrix must have at least one row and one column");
    }
    if (values_.size() != rows_ * cols_) {
        throw std::invalid_argument("value count does not match matrix shape");
    }
    if (!row_labels_.empty() && row_labels_.size() != rows_) {
        throw std::invalid_argument("row label count does not match row count");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("matrix contains non-finite values");
        }
    }
}

SignalMatrix SignalMatrix::from_rows(const std::vector<std::vector<double>>& rows,
                                     std::vector<std::string> row_labels) {
    if (rows.empty()) {
        throw std::invalid_argument("matrix must have at least one row and one column");
    }
    const std::size_t cols = rows.front().size();
    std::vector<double> values;
    values.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) {
            throw std::invalid_argument("rows have unequal lengths");
        }
        values.insert(values.end(), r.begin(), r.end());
    }
    return SignalMatrix(std::move(values), rows.size(), cols, std::move(row_labels));
}

std::optional<std::string> validate_segmentation(const Segmentation& seg, std::size_t n) {
    if (n < 1) {
        return "sample count must be at least 1";
    }
    if (seg.n != n) {
        return "sample count mismatch";
    }
    for (std::size_t h = 0; h < seg.boundaries.size(); ++h) {
        const std::size_t b = seg.boundaries[h];
        if (b < 1 || b > n - 1) {
            return "boundary out of range [1, n-1]";
        }
        if (h > 0 && seg.boundaries[h - 1] >= b) {
            return "not strictly increasing";
        }
    }
    return std::nullopt;
}

Segmentation uniform_presegmentation(std::size_t n, std::size_t s) {
    if (s < 1) {
        throw std::invalid_argument("segment count must be at least 1");
    }
    if (s > n) {
        throw std::invalid_argument("more segments than samples");
    }
    Segmentation seg;
    seg.n = n;
    seg.boundaries.reserve(s - 1);
    for (std::size_t h = 1; h < s; ++h) {
        const double pos = static_cast<double>(h) * static_cast<double>(n) / static_cast<double>(s);
        seg.boundaries.push_back(static_cast<std::size_t>(std::llround(pos)));
    }
    return seg;
}

} // namespace varseg
