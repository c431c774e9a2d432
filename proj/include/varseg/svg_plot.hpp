#pragma once

#include <filesystem>

#include "varseg/types.hpp"

namespace varseg {

/// Renders the matrix as an SVG: one polyline per signal row, dashed
/// vertical lines (class "boundary") at the interior boundary indices,
/// and labeled axes. Output bytes are deterministic for fixed inputs.
void emit_plot(const SignalMatrix& m, const Segmentation& seg,
               const std::filesystem::path& path);

} // namespace varseg
