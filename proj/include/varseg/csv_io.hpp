#pragma once

#include <filesystem>

#include "varseg/types.hpp"

namespace varseg {

/// How a CSV file maps onto the matrix. rows_are_signals reads each CSV
/// line as one signal; rows_are_samples treats lines as time points and
/// transposes, taking an optional leading header line as signal labels.
enum class Orientation {
    rows_are_signals,
    rows_are_samples,
};

/// Parses a rectangular numeric CSV. A first line whose cells are all
/// non-numeric is treated as a label header. Throws DataError naming the
/// offending 1-based (line, column) for ragged rows, non-numeric cells,
/// and non-finite values.
SignalMatrix load_csv(const std::filesystem::path& path, Orientation orientation);

/// Writes one signal per line, values in shortest round-trip decimal
/// form, no header. load_csv with rows_are_signals restores the exact
/// values.
void write_csv(const SignalMatrix& m, const std::filesystem::path& path);

} // namespace varseg
