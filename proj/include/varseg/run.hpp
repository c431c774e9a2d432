#pragma once

#include <filesystem>
#include <optional>

#include <json.hpp>

#include "varseg/csv_io.hpp"
#include "varseg/preprocess.hpp"
#include "varseg/segmenter.hpp"
#include "varseg/types.hpp"

namespace varseg {

enum class Algorithm {
    greedy,
    brute_force,
};

/// One batch analysis: ingest a CSV, optionally filter rows, segment
/// with the chosen algorithm, write the result document and an optional
/// plot.
struct RunConfig {
    std::filesystem::path input_path;
    Orientation orientation = Orientation::rows_are_signals;
    std::size_t segments = 1;
    Algorithm algorithm = Algorithm::greedy;
    std::optional<PreprocessConfig> preprocess;
    GreedyConfig greedy;
    std::filesystem::path output_path; // empty: caller prints the document
    std::optional<std::filesystem::path> plot_path;
    bool force_brute = false;
};

nlohmann::json segmentation_to_json(const Segmentation& seg);
Segmentation segmentation_from_json(const nlohmann::json& j);

/// Executes the configured pipeline and returns the result document.
/// Boundaries are 0-based in "boundaries"; "boundaries_1based" mirrors
/// them as 1-based sample numbers of each segment's first sample. All
/// fields except "timing" are deterministic for identical input + config.
nlohmann::json run(const RunConfig& cfg);

} // namespace varseg
