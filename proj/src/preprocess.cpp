#include "varseg/preprocess.hpp"

#include <algorithm>
#include <stdexcept>

#include "varseg/errors.hpp"

namespace varseg {

std::pair<SignalMatrix, std::vector<double>> offset_reduce(const SignalMatrix& m) {
    std::vector<double> offsets(m.rows());
    std::vector<double> values;
    values.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto row = m.row(i);
        const double offset = *std::min_element(row.begin(), row.end());
        offsets[i] = offset;
        for (double v : row) {
            values.push_back(v - offset);
        }
    }
    return {SignalMatrix(std::move(values), m.rows(), m.cols(), m.row_labels()), std::move(offsets)};
}

std::pair<SignalMatrix, PreprocessReport> peak_to_valley_filter(const SignalMatrix& m,
                                                                const PreprocessConfig& cfg) {
    if (!(cfg.ptv_fraction > 0.0) || cfg.ptv_fraction > 1.0) {
        throw std::invalid_argument("ptv_fraction must be in (0, 1]");
    }

    PreprocessReport report;
    report.offsets.resize(m.rows());
    report.ptv.resize(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto row = m.row(i);
        const auto [lo, hi] = std::minmax_element(row.begin(), row.end());
        report.offsets[i] = *lo;
        report.ptv[i] = *hi - *lo;
    }

    const double max_ptv = *std::max_element(report.ptv.begin(), report.ptv.end());
    if (max_ptv <= 0.0) {
        throw DataError("no dynamic rows to filter");
    }
    report.threshold = cfg.ptv_fraction * max_ptv;

    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (report.ptv[i] > report.threshold || report.ptv[i] == max_ptv) {
            report.kept_rows.push_back(i);
        }
    }

    std::vector<double> values;
    values.reserve(report.kept_rows.size() * m.cols());
    std::vector<std::string> labels;
    for (std::size_t i : report.kept_rows) {
        const auto row = m.row(i);
        const double shift = cfg.restore_offsets ? 0.0 : report.offsets[i];
        for (double v : row) {
            values.push_back(v - shift);
        }
        if (!m.row_labels().empty()) {
            labels.push_back(m.row_labels()[i]);
        }
    }
    SignalMatrix filtered(std::move(values), report.kept_rows.size(), m.cols(), std::move(labels));
    return {std::move(filtered), std::move(report)};
}

} // namespace varseg
