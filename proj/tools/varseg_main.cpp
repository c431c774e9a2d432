#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "varseg/csv_io.hpp"
#include "varseg/errors.hpp"
#include "varseg/run.hpp"
#include "varseg/synth.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitCostGuard = 3;

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"varseg: variance-minimizing segmentation of multivariate time-series traces"};

    std::string input;
    std::string orientation = "rows-are-signals";
    std::size_t segments = 1;
    std::string algorithm = "greedy";
    double ptv_fraction = -1.0;
    bool no_restore_offsets = false;
    double epsilon = 1e-12;
    std::uint64_t max_iterations = 0;
    std::string output;
    std::string plot;
    bool force_brute = false;
    std::string seed_fixture;

    app.add_option("--input", input, "input CSV file");
    app.add_option("--orientation", orientation, "CSV layout")
        ->check(CLI::IsMember({"rows-are-signals", "rows-are-samples"}))
        ->capture_default_str();
    app.add_option("--segments", segments, "number of segments to fit")->capture_default_str();
    app.add_option("--algorithm", algorithm, "optimizer")
        ->check(CLI::IsMember({"greedy", "brute-force"}))
        ->capture_default_str();
    app.add_option("--ptv-fraction", ptv_fraction,
                   "enable row filtering: keep rows whose peak-to-valley value exceeds this "
                   "fraction of the largest one (0, 1]");
    app.add_flag("--no-restore-offsets", no_restore_offsets,
                 "keep filtered rows offset-reduced (minimum at 0) instead of restoring their "
                 "original range");
    app.add_option("--epsilon", epsilon, "minimum objective improvement for a greedy move")
        ->capture_default_str();
    app.add_option("--max-iterations", max_iterations, "cap on greedy passes (0 = unlimited)")
        ->capture_default_str();
    app.add_option("--output", output, "result document path (default: print to stdout)");
    app.add_option("--plot", plot, "write an SVG plot of the segmented signals");
    app.add_flag("--force-brute", force_brute, "override the brute-force cost guard");
    app.add_option("--seed-fixture", seed_fixture,
                   "write the built-in benchmark signal as a CSV fixture to this path and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (!seed_fixture.empty()) {
            varseg::write_csv(varseg::benchmark_signal(), seed_fixture);
            return kExitOk;
        }

        if (input.empty()) {
            std::cerr << "error: --input is required (or use --seed-fixture)\n";
            return kExitUsage;
        }

        varseg::RunConfig cfg;
        cfg.input_path = input;
        cfg.orientation = orientation == "rows-are-signals"
                              ? varseg::Orientation::rows_are_signals
                              : varseg::Orientation::rows_are_samples;
        cfg.segments = segments;
        cfg.algorithm = algorithm == "greedy" ? varseg::Algorithm::greedy
                                              : varseg::Algorithm::brute_force;
        if (ptv_fraction >= 0.0) {
            cfg.preprocess = varseg::PreprocessConfig{ptv_fraction, !no_restore_offsets};
        }
        cfg.greedy.epsilon = epsilon;
        cfg.greedy.max_iterations = max_iterations;
        cfg.output_path = output;
        if (!plot.empty()) {
            cfg.plot_path = plot;
        }
        cfg.force_brute = force_brute;

        const nlohmann::json doc = varseg::run(cfg);
        if (output.empty()) {
            std::cout << doc.dump(2) << '\n';
        }
        return kExitOk;
    } catch (const varseg::CostGuardError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCostGuard;
    } catch (const varseg::DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
}
