#include "varseg/run.hpp"

#include <fstream>
#include <stdexcept>

#include "varseg/errors.hpp"
#include "varseg/svg_plot.hpp"
#include "varseg/variance.hpp"

namespace varseg {

namespace {

const char* orientation_name(Orientation o) {
    return o == Orientation::rows_are_signals ? "rows-are-signals" : "rows-are-samples";
}

const char* algorithm_name(Algorithm a) {
    return a == Algorithm::greedy ? "greedy" : "brute-force";
}

nlohmann::json config_echo(const RunConfig& cfg) {
    nlohmann::json j;
    j["input"] = cfg.input_path.string();
    j["orientation"] = orientation_name(cfg.orientation);
    j["segments"] = cfg.segments;
    j["algorithm"] = algorithm_name(cfg.algorithm);
    if (cfg.preprocess) {
        j["preprocess"] = {
            {"ptv_fraction", cfg.preprocess->ptv_fraction},
            {"restore_offsets", cfg.preprocess->restore_offsets},
        };
    } else {
        j["preprocess"] = nullptr;
    }
    j["greedy"] = {
        {"epsilon", cfg.greedy.epsilon},
        {"max_iterations", cfg.greedy.max_iterations},
        {"candidates",
         cfg.greedy.candidates == CandidateRange::two_sided ? "two-sided" : "one-sided"},
    };
    j["force_brute"] = cfg.force_brute;
    return j;
}

} // namespace

nlohmann::json segmentation_to_json(const Segmentation& seg) {
    return nlohmann::json{{"boundaries", seg.boundaries}, {"n", seg.n}};
}

Segmentation segmentation_from_json(const nlohmann::json& j) {
    Segmentation seg;
    seg.boundaries = j.at("boundaries").get<std::vector<std::size_t>>();
    seg.n = j.at("n").get<std::size_t>();
    return seg;
}

nlohmann::json run(const RunConfig& cfg) {
    if (cfg.segments < 1) {
        throw std::invalid_argument("segments must be at least 1");
    }
    if (cfg.input_path.empty()) {
        throw std::invalid_argument("input path must not be empty");
    }

    const SignalMatrix loaded = load_csv(cfg.input_path, cfg.orientation);

    std::optional<PreprocessReport> report;
    SignalMatrix analyzed = loaded;
    if (cfg.preprocess) {
        auto [filtered, rep] = peak_to_valley_filter(loaded, *cfg.preprocess);
        analyzed = std::move(filtered);
        report = std::move(rep);
    }

    SegmentationResult result;
    switch (cfg.algorithm) {
    case Algorithm::greedy:
        result = greedy_segment(analyzed, cfg.segments, cfg.greedy);
        break;
    case Algorithm::brute_force:
        result = brute_force_segment(analyzed, cfg.segments, cfg.force_brute);
        break;
    }

    nlohmann::json doc;
    doc["schema_version"] = "1.0";
    doc["config"] = config_echo(cfg);

    doc["input"] = {
        {"path", cfg.input_path.string()},
        {"rows", loaded.rows()},
        {"samples", loaded.cols()},
    };
    if (report) {
        doc["input"]["kept_rows"] = report->kept_rows;
        doc["input"]["ptv_threshold"] = report->threshold;
    } else {
        doc["input"]["kept_rows"] = nullptr;
    }
    if (!analyzed.row_labels().empty()) {
        doc["input"]["row_labels"] = analyzed.row_labels();
    }

    const auto& bounds = result.segmentation.boundaries;
    doc["boundaries"] = bounds;
    std::vector<std::size_t> one_based(bounds.size());
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        one_based[i] = bounds[i] + 1; // 1-based index of the right segment's first sample
    }
    doc["boundaries_1based"] = one_based;
    doc["objective"] = result.objective;
    doc["objective_trace"] = result.objective_trace;
    doc["iterations"] = result.iterations;

    const PrefixStats ps(analyzed);
    nlohmann::json segments = nlohmann::json::array();
    for (std::size_t h = 0; h < result.segmentation.segment_count(); ++h) {
        const std::size_t lo = result.segmentation.segment_start(h);
        const std::size_t hi = result.segmentation.segment_end(h);
        nlohmann::json seg_entry;
        seg_entry["start"] = lo;
        seg_entry["end"] = hi;
        std::vector<double> means(analyzed.rows());
        std::vector<double> variances(analyzed.rows());
        for (std::size_t i = 0; i < analyzed.rows(); ++i) {
            means[i] = segment_mean_fast(ps, i, lo, hi);
            variances[i] = segment_variance_fast(ps, i, lo, hi);
        }
        seg_entry["means"] = means;
        seg_entry["variances"] = variances;
        segments.push_back(std::move(seg_entry));
    }
    doc["segments"] = std::move(segments);
    doc["timing"] = {{"elapsed_seconds", result.elapsed.count()}};

    if (!cfg.output_path.empty()) {
        std::ofstream out(cfg.output_path, std::ios::binary);
        if (!out) {
            throw DataError("cannot write file: " + cfg.output_path.string());
        }
        out << doc.dump(2) << '\n';
        if (!out) {
            throw DataError("failed writing file: " + cfg.output_path.string());
        }
    }
    if (cfg.plot_path) {
        emit_plot(analyzed, result.segmentation, *cfg.plot_path);
    }
    return doc;
}

} // namespace varseg
