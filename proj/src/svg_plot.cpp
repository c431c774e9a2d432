#include "varseg/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

#include "varseg/errors.hpp"

namespace varseg {

namespace {

constexpr double kWidth = 960.0;
constexpr double kHeight = 540.0;
constexpr double kMarginLeft = 62.0;
constexpr double kMarginRight = 16.0;
constexpr double kMarginTop = 16.0;
constexpr double kMarginBottom = 42.0;

constexpr std::array<const char*, 10> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};

std::string fixed(double v, int precision = 2) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, precision);
    return std::string(buf, ptr);
}

std::string general(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

// Largest 1/2/5 * 10^k step producing at most `slots` ticks over `range`.
double nice_step(double range, int slots) {
    if (range <= 0.0) {
        return 1.0;
    }
    const double raw = range / slots;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double mult : {1.0, 2.0, 5.0}) {
        if (mult * mag >= raw) {
            return mult * mag;
        }
    }
    return 10.0 * mag;
}

} // namespace

void emit_plot(const SignalMatrix& m, const Segmentation& seg,
               const std::filesystem::path& path) {
    if (auto violation = validate_segmentation(seg, m.cols())) {
        throw std::invalid_argument(*violation);
    }

    const auto& values = m.values();
    double vmin = *std::min_element(values.begin(), values.end());
    double vmax = *std::max_element(values.begin(), values.end());
    double pad = 0.05 * (vmax - vmin);
    if (pad == 0.0) {
        pad = 1.0;
    }
    vmin -= pad;
    vmax += pad;

    const std::size_t n = m.cols();
    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    const double x_span = n > 1 ? static_cast<double>(n - 1) : 1.0;

    auto x_of = [&](double j) { return kMarginLeft + j / x_span * plot_w; };
    auto y_of = [&](double v) {
        return kMarginTop + (vmax - v) / (vmax - vmin) * plot_h;
    };

    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("cannot write plot: " + path.string());
    }

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << general(kWidth)
        << "\" height=\"" << general(kHeight) << "\" viewBox=\"0 0 " << general(kWidth) << ' '
        << general(kHeight) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

    const double x0 = kMarginLeft;
    const double x1 = kWidth - kMarginRight;
    const double y0 = kHeight - kMarginBottom;
    const double y1 = kMarginTop;

    // axes
    out << "<line x1=\"" << fixed(x0) << "\" y1=\"" << fixed(y0) << "\" x2=\"" << fixed(x1)
        << "\" y2=\"" << fixed(y0) << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    out << "<line x1=\"" << fixed(x0) << "\" y1=\"" << fixed(y0) << "\" x2=\"" << fixed(x0)
        << "\" y2=\"" << fixed(y1) << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";

    const double x_step = std::max(1.0, std::round(nice_step(x_span, 8)));
    for (double t = 0.0; t <= x_span + 1e-9; t += x_step) {
        const double px = x_of(t);
        out << "<line x1=\"" << fixed(px) << "\" y1=\"" << fixed(y0) << "\" x2=\"" << fixed(px)
            << "\" y2=\"" << fixed(y0 + 4.0) << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << fixed(px) << "\" y=\"" << fixed(y0 + 18.0)
            << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
            << general(t) << "</text>\n";
    }
    out << "<text x=\"" << fixed((x0 + x1) / 2.0) << "\" y=\"" << fixed(kHeight - 8.0)
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">sample</text>\n";

    const double y_step = nice_step(vmax - vmin, 6);
    const double y_first = std::ceil(vmin / y_step) * y_step;
    for (double t = y_first; t <= vmax + 1e-9 * y_step; t += y_step) {
        const double py = y_of(t);
        out << "<line x1=\"" << fixed(x0 - 4.0) << "\" y1=\"" << fixed(py) << "\" x2=\""
            << fixed(x0) << "\" y2=\"" << fixed(py)
            << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << fixed(x0 - 7.0) << "\" y=\"" << fixed(py + 4.0)
            << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">"
            << general(t) << "</text>\n";
    }
    out << "<text x=\"14\" y=\"" << fixed((y0 + y1) / 2.0)
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\""
        << " transform=\"rotate(-90 14 " << fixed((y0 + y1) / 2.0) << ")\">value</text>\n";

    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << "<polyline fill=\"none\" stroke=\"" << kPalette[i % kPalette.size()]
            << "\" stroke-width=\"1\" points=\"";
        for (std::size_t j = 0; j < n; ++j) {
            if (j > 0) {
                out << ' ';
            }
            out << fixed(x_of(static_cast<double>(j))) << ',' << fixed(y_of(m(i, j)));
        }
        out << "\"/>\n";
    }

    for (std::size_t b : seg.boundaries) {
        const double px = x_of(static_cast<double>(b));
        out << "<line class=\"boundary\" x1=\"" << fixed(px) << "\" y1=\"" << fixed(y0)
            << "\" x2=\"" << fixed(px) << "\" y2=\"" << fixed(y1)
            << "\" stroke=\"#444444\" stroke-width=\"1\" stroke-dasharray=\"5 4\"/>\n";
    }

    out << "</svg>\n";
    if (!out) {
        throw DataError("failed writing plot: " + path.string());
    }
}

} // namespace varseg
