#include "varseg/csv_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "varseg/errors.hpp"

namespace varseg {

namespace {

std::string_view trim(std::string_view token) {
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) {
        token.remove_prefix(1);
    }
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) {
        token.remove_suffix(1);
    }
    return token;
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            cells.emplace_back(trim(std::string_view(line).substr(start)));
            break;
        }
        cells.emplace_back(trim(std::string_view(line).substr(start, comma - start)));
        start = comma + 1;
    }
    return cells;
}

bool parse_double(std::string_view token, double& out) {
    if (token.empty()) {
        return false;
    }
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

std::string cell_coordinates(std::size_t line, std::size_t col) {
    std::ostringstream s;
    s << "(" << line << ", " << col << ")";
    return s.str();
}

std::string format_value(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

} // namespace

SignalMatrix load_csv(const std::filesystem::path& path, Orientation orientation) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open file: " + path.string());
    }

    std::vector<std::vector<std::string>> lines;
    std::string raw;
    while (std::getline(in, raw)) {
        if (!raw.empty() && raw.back() == '\r') {
            raw.pop_back();
        }
        if (trim(raw).empty()) {
            continue;
        }
        lines.push_back(split_line(raw));
    }
    if (lines.empty()) {
        throw DataError("empty CSV file: " + path.string());
    }

    // A first line with no numeric cell at all is a label header.
    std::vector<std::string> header;
    std::size_t first_data = 0;
    {
        bool any_numeric = false;
        double ignored;
        for (const auto& cell : lines[0]) {
            if (parse_double(cell, ignored)) {
                any_numeric = true;
                break;
            }
        }
        if (!any_numeric && lines.size() > 1) {
            header = lines[0];
            first_data = 1;
        }
    }

    const std::size_t width = lines[first_data].size();
    if (!header.empty() && header.size() != width) {
        std::ostringstream msg;
        msg << "ragged row: line 1 has " << header.size() << " cells, expected " << width;
        throw DataError(msg.str());
    }

    std::vector<std::vector<double>> data;
    data.reserve(lines.size() - first_data);
    for (std::size_t r = first_data; r < lines.size(); ++r) {
        const auto& cells = lines[r];
        const std::size_t line_no = r + 1;
        if (cells.size() != width) {
            std::ostringstream msg;
            msg << "ragged row: line " << line_no << " has " << cells.size()
                << " cells, expected " << width;
            throw DataError(msg.str());
        }
        std::vector<double> row(width);
        for (std::size_t c = 0; c < width; ++c) {
            double v;
            if (!parse_double(cells[c], v)) {
                throw DataError("non-numeric cell at " + cell_coordinates(line_no, c + 1));
            }
            if (!std::isfinite(v)) {
                throw DataError("non-finite value at " + cell_coordinates(line_no, c + 1));
            }
            row[c] = v;
        }
        data.push_back(std::move(row));
    }

    if (orientation == Orientation::rows_are_signals) {
        return SignalMatrix::from_rows(data);
    }

    // Transpose: CSV lines are samples, columns are signals.
    const std::size_t signals = width;
    const std::size_t samples = data.size();
    std::vector<double> values(signals * samples);
    for (std::size_t r = 0; r < samples; ++r) {
        for (std::size_t c = 0; c < signals; ++c) {
            values[c * samples + r] = data[r][c];
        }
    }
    return SignalMatrix(std::move(values), signals, samples, header);
}

void write_csv(const SignalMatrix& m, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("cannot write file: " + path.string());
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) {
                out << ',';
            }
            out << format_value(m(i, j));
        }
        out << '\n';
    }
    if (!out) {
        throw DataError("failed writing file: " + path.string());
    }
}

} // namespace varseg
