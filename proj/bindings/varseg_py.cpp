#include <pybind11/chrono.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "varseg/csv_io.hpp"
#include "varseg/errors.hpp"
#include "varseg/preprocess.hpp"
#include "varseg/run.hpp"
#include "varseg/segmenter.hpp"
#include "varseg/svg_plot.hpp"
#include "varseg/synth.hpp"
#include "varseg/types.hpp"
#include "varseg/variance.hpp"

namespace py = pybind11;
using namespace varseg;

namespace {

SignalMatrix matrix_from_array(const py::array_t<double, py::array::c_style | py::array::forcecast>& arr,
                               std::vector<std::string> labels) {
    if (arr.ndim() != 2) {
        throw std::invalid_argument("expected a 2-D array (rows x samples)");
    }
    const auto rows = static_cast<std::size_t>(arr.shape(0));
    const auto cols = static_cast<std::size_t>(arr.shape(1));
    std::vector<double> values(arr.data(), arr.data() + rows * cols);
    return SignalMatrix(std::move(values), rows, cols, std::move(labels));
}

py::array_t<double> matrix_to_array(const SignalMatrix& m) {
    py::array_t<double> arr({m.rows(), m.cols()});
    std::copy(m.values().begin(), m.values().end(), arr.mutable_data());
    return arr;
}

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
    case nlohmann::json::value_t::null:
        return py::none();
    case nlohmann::json::value_t::boolean:
        return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
        return py::int_(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned:
        return py::int_(j.get<std::uint64_t>());
    case nlohmann::json::value_t::number_float:
        return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
        return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
        py::list out;
        for (const auto& item : j) {
            out.append(json_to_py(item));
        }
        return out;
    }
    case nlohmann::json::value_t::object: {
        py::dict out;
        for (const auto& [key, value] : j.items()) {
            out[py::str(key)] = json_to_py(value);
        }
        return out;
    }
    default:
        return py::none();
    }
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Variance-minimizing segmentation of multivariate time-series traces";

    py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
    py::register_exception<CostGuardError>(m, "CostGuardError", PyExc_RuntimeError);

    py::class_<SignalMatrix>(m, "SignalMatrix")
        .def(py::init(&matrix_from_array), py::arg("values"),
             py::arg("row_labels") = std::vector<std::string>{})
        .def_property_readonly("rows", &SignalMatrix::rows)
        .def_property_readonly("cols", &SignalMatrix::cols)
        .def_property_readonly("row_labels", &SignalMatrix::row_labels)
        .def("to_numpy", &matrix_to_array)
        .def("__repr__", [](const SignalMatrix& sm) {
            return "SignalMatrix(" + std::to_string(sm.rows()) + " rows, " +
                   std::to_string(sm.cols()) + " samples)";
        });

    py::class_<Segmentation>(m, "Segmentation")
        .def(py::init([](std::vector<std::size_t> boundaries, std::size_t n) {
                 return Segmentation{std::move(boundaries), n};
             }),
             py::arg("boundaries"), py::arg("n"))
        .def_readonly("boundaries", &Segmentation::boundaries)
        .def_readonly("n", &Segmentation::n)
        .def_property_readonly("segment_count", &Segmentation::segment_count)
        .def("__eq__", [](const Segmentation& a, const Segmentation& b) { return a == b; })
        .def("__repr__", [](const Segmentation& s) {
            std::string out = "Segmentation(boundaries=[";
            for (std::size_t i = 0; i < s.boundaries.size(); ++i) {
                if (i) out += ", ";
                out += std::to_string(s.boundaries[i]);
            }
            return out + "], n=" + std::to_string(s.n) + ")";
        });

    py::class_<SegmentationResult>(m, "SegmentationResult")
        .def_readonly("segmentation", &SegmentationResult::segmentation)
        .def_readonly("objective", &SegmentationResult::objective)
        .def_readonly("iterations", &SegmentationResult::iterations)
        .def_readonly("objective_trace", &SegmentationResult::objective_trace)
        .def_property_readonly("elapsed_seconds",
                               [](const SegmentationResult& r) { return r.elapsed.count(); });

    m.def("validate_segmentation", &validate_segmentation, py::arg("segmentation"), py::arg("n"),
          "Returns None when valid, otherwise the first violated rule.");
    m.def("uniform_presegmentation", &uniform_presegmentation, py::arg("n"), py::arg("segments"));

    m.def("row_variance",
          [](const std::vector<double>& row) { return row_variance(row); },
          py::arg("row"));
    m.def("matrix_variance", &matrix_variance, py::arg("matrix"));
    m.def("segmented_variance", &segmented_variance, py::arg("matrix"), py::arg("segmentation"));

    py::class_<PrefixStats>(m, "PrefixStats")
        .def(py::init<const SignalMatrix&>(), py::arg("matrix"))
        .def_property_readonly("rows", &PrefixStats::rows)
        .def_property_readonly("samples", &PrefixStats::samples)
        .def("cum_sum", &PrefixStats::cum_sum, py::arg("row"), py::arg("j"))
        .def("cum_sq", &PrefixStats::cum_sq, py::arg("row"), py::arg("j"));
    m.def("build_prefix_stats", &build_prefix_stats, py::arg("matrix"));
    m.def("segment_variance_fast", &segment_variance_fast, py::arg("prefix_stats"),
          py::arg("row"), py::arg("lo"), py::arg("hi"));
    m.def("segmented_variance_fast", &segmented_variance_fast, py::arg("prefix_stats"),
          py::arg("segmentation"));

    py::class_<PreprocessConfig>(m, "PreprocessConfig")
        .def(py::init([](double ptv_fraction, bool restore_offsets) {
                 return PreprocessConfig{ptv_fraction, restore_offsets};
             }),
             py::arg("ptv_fraction") = 0.6, py::arg("restore_offsets") = true)
        .def_readwrite("ptv_fraction", &PreprocessConfig::ptv_fraction)
        .def_readwrite("restore_offsets", &PreprocessConfig::restore_offsets);

    py::class_<PreprocessReport>(m, "PreprocessReport")
        .def_readonly("offsets", &PreprocessReport::offsets)
        .def_readonly("ptv", &PreprocessReport::ptv)
        .def_readonly("kept_rows", &PreprocessReport::kept_rows)
        .def_readonly("threshold", &PreprocessReport::threshold);

    m.def("offset_reduce", &offset_reduce, py::arg("matrix"));
    m.def("peak_to_valley_filter", &peak_to_valley_filter, py::arg("matrix"),
          py::arg("config") = PreprocessConfig{});

    py::enum_<CandidateRange>(m, "CandidateRange")
        .value("two_sided", CandidateRange::two_sided)
        .value("one_sided", CandidateRange::one_sided);

    py::class_<GreedyConfig>(m, "GreedyConfig")
        .def(py::init([](double epsilon, std::uint64_t max_iterations,
                         std::optional<Segmentation> initial, CandidateRange candidates) {
                 return GreedyConfig{epsilon, max_iterations, std::move(initial), candidates};
             }),
             py::arg("epsilon") = 1e-12, py::arg("max_iterations") = 0,
             py::arg("initial") = std::nullopt,
             py::arg("candidates") = CandidateRange::two_sided)
        .def_readwrite("epsilon", &GreedyConfig::epsilon)
        .def_readwrite("max_iterations", &GreedyConfig::max_iterations)
        .def_readwrite("initial", &GreedyConfig::initial)
        .def_readwrite("candidates", &GreedyConfig::candidates);

    m.def("combination_count", &combination_count, py::arg("n"), py::arg("k"));
    m.def("brute_force_segment", &brute_force_segment, py::arg("matrix"), py::arg("segments"),
          py::arg("force") = false, py::call_guard<py::gil_scoped_release>());
    m.def("greedy_segment", &greedy_segment, py::arg("matrix"), py::arg("segments"),
          py::arg("config") = GreedyConfig{}, py::call_guard<py::gil_scoped_release>());
    m.def("local_pair_cost", &local_pair_cost, py::arg("prefix_stats"), py::arg("lo"),
          py::arg("mid"), py::arg("hi"));

    py::class_<SynthSpec>(m, "SynthSpec")
        .def(py::init([](std::size_t n, std::size_t m_rows, Segmentation true_boundaries,
                         std::vector<std::vector<double>> level_matrix, double noise_sigma,
                         std::uint64_t seed) {
                 return SynthSpec{n, m_rows, std::move(true_boundaries),
                                  std::move(level_matrix), noise_sigma, seed};
             }),
             py::arg("n"), py::arg("m_rows"), py::arg("true_boundaries"),
             py::arg("level_matrix"), py::arg("noise_sigma") = 0.0, py::arg("seed") = 0)
        .def_readwrite("n", &SynthSpec::n)
        .def_readwrite("m_rows", &SynthSpec::m_rows)
        .def_readwrite("true_boundaries", &SynthSpec::true_boundaries)
        .def_readwrite("level_matrix", &SynthSpec::level_matrix)
        .def_readwrite("noise_sigma", &SynthSpec::noise_sigma)
        .def_readwrite("seed", &SynthSpec::seed);

    m.def("generate", &generate, py::arg("spec"));
    m.def("benchmark_signal_spec", &benchmark_signal_spec);
    m.def("benchmark_signal", &benchmark_signal);

    py::enum_<Orientation>(m, "Orientation")
        .value("rows_are_signals", Orientation::rows_are_signals)
        .value("rows_are_samples", Orientation::rows_are_samples);

    m.def("load_csv", &load_csv, py::arg("path"),
          py::arg("orientation") = Orientation::rows_are_signals);
    m.def("write_csv", &write_csv, py::arg("matrix"), py::arg("path"));
    m.def("emit_plot", &emit_plot, py::arg("matrix"), py::arg("segmentation"), py::arg("path"));

    py::enum_<Algorithm>(m, "Algorithm")
        .value("greedy", Algorithm::greedy)
        .value("brute_force", Algorithm::brute_force);

    py::class_<RunConfig>(m, "RunConfig")
        .def(py::init<>())
        .def_readwrite("input_path", &RunConfig::input_path)
        .def_readwrite("orientation", &RunConfig::orientation)
        .def_readwrite("segments", &RunConfig::segments)
        .def_readwrite("algorithm", &RunConfig::algorithm)
        .def_readwrite("preprocess", &RunConfig::preprocess)
        .def_readwrite("greedy", &RunConfig::greedy)
        .def_readwrite("output_path", &RunConfig::output_path)
        .def_readwrite("plot_path", &RunConfig::plot_path)
        .def_readwrite("force_brute", &RunConfig::force_brute);

    m.def("run", [](const RunConfig& cfg) { return json_to_py(run(cfg)); }, py::arg("config"),
          "Execute the full pipeline; returns the result document as a dict.");

#ifdef VARSEG_VERSION
    m.attr("__version__") = VARSEG_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
