#include "varseg/segmenter.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "varseg/errors.hpp"

namespace varseg {

namespace {

double segment_cost_all_rows(const PrefixStats& ps, std::size_t lo, std::size_t hi) {
    double cost = 0.0;
    for (std::size_t i = 0; i < ps.rows(); ++i) {
        cost += segment_variance_fast(ps, i, lo, hi);
    }
    return cost;
}

void check_segment_count(std::size_t n, std::size_t s) {
    if (s < 1) {
        throw std::invalid_argument("segment count must be at least 1");
    }
    if (s > n) {
        throw std::invalid_argument("more segments than samples");
    }
}

} // namespace

double combination_count(std::size_t n, std::size_t k) {
    if (k > n) {
        return 0.0;
    }
    k = std::min(k, n - k);
    double result = 1.0;
    for (std::size_t i = 1; i <= k; ++i) {
        result *= static_cast<double>(n - k + i);
        result /= static_cast<double>(i);
        if (std::isinf(result)) {
            return result;
        }
    }
    return result;
}

SegmentationResult brute_force_segment(const SignalMatrix& m, std::size_t s, bool force) {
    const std::size_t n = m.cols();
    check_segment_count(n, s);

    const double combos = combination_count(n - 1, s - 1);
    if (combos > kBruteForceGuard && !force) {
        std::ostringstream msg;
        msg << "exhaustive search refused: " << combos << " candidate placements exceed the "
            << kBruteForceGuard << " guard (pass force to override)";
        throw CostGuardError(msg.str(), combos);
    }

    const auto t0 = std::chrono::steady_clock::now();
    const PrefixStats ps(m);

    SegmentationResult result;
    result.segmentation.n = n;

    std::vector<std::size_t> current(s - 1);
    std::vector<std::size_t> best;
    double best_objective = std::numeric_limits<double>::infinity();
    std::uint64_t evaluated = 0;
    std::vector<double> trace;

    // Places boundary h at every position that still leaves room for the
    // remaining ones, carrying the cost of the segments already closed.
    auto place = [&](auto&& self, std::size_t h, std::size_t start, double partial) -> void {
        if (h == s - 1) {
            const std::size_t last_lo = s > 1 ? current[s - 2] : 0;
            const double objective = partial + segment_cost_all_rows(ps, last_lo, n);
            ++evaluated;
            if (objective < best_objective) {
                if (evaluated > 1) {
                    trace.push_back(objective);
                }
                best_objective = objective;
                best = current;
            }
            return;
        }
        const std::size_t lo = h > 0 ? current[h - 1] : 0;
        // Boundary h must leave at least one sample for each segment after it.
        for (std::size_t x = start; x + (s - 1 - h) <= n; ++x) {
            current[h] = x;
            self(self, h + 1, x + 1, partial + segment_cost_all_rows(ps, lo, x));
        }
    };
    place(place, 0, 1, 0.0);

    result.segmentation.boundaries = std::move(best);
    result.objective = best_objective;
    result.iterations = evaluated;
    result.objective_trace = std::move(trace);
    result.elapsed = std::chrono::steady_clock::now() - t0;
    return result;
}

double local_pair_cost(const PrefixStats& ps, std::size_t lo, std::size_t mid, std::size_t hi) {
    if (!(lo < mid && mid < hi && hi <= ps.samples())) {
        throw std::invalid_argument("invalid boundary triple: need lo < mid < hi <= samples");
    }
    double cost = 0.0;
    for (std::size_t i = 0; i < ps.rows(); ++i) {
        cost += segment_variance_fast(ps, i, lo, mid);
        cost += segment_variance_fast(ps, i, mid, hi);
    }
    return cost;
}

SegmentationResult greedy_segment(const SignalMatrix& m, std::size_t s, const GreedyConfig& cfg) {
    const std::size_t n = m.cols();
    check_segment_count(n, s);
    if (!(cfg.epsilon > 0.0)) {
        throw std::invalid_argument("epsilon must be positive");
    }

    Segmentation seg = cfg.initial ? *cfg.initial : uniform_presegmentation(n, s);
    if (auto violation = validate_segmentation(seg, n)) {
        throw std::invalid_argument("invalid initial segmentation: " + *violation);
    }
    if (seg.segment_count() != s) {
        throw std::invalid_argument("initial segmentation has wrong segment count");
    }

    const auto t0 = std::chrono::steady_clock::now();
    const PrefixStats ps(m);
    auto& bounds = seg.boundaries;

    double objective = 0.0;
    for (std::size_t h = 0; h < seg.segment_count(); ++h) {
        objective += segment_cost_all_rows(ps, seg.segment_start(h), seg.segment_end(h));
    }

    SegmentationResult result;
    std::uint64_t passes = 0;
    bool improved = true;
    while (improved) {
        improved = false;
        ++passes;
        for (std::size_t h = 0; h + 1 < s; ++h) {
            const std::size_t lo = h > 0 ? bounds[h - 1] : 0;
            const std::size_t hi = h + 2 < s ? bounds[h + 1] : n;
            const double current_cost = local_pair_cost(ps, lo, bounds[h], hi);

            const std::size_t scan_end = cfg.candidates == CandidateRange::two_sided
                                             ? hi
                                             : bounds[h] + 1;
            double best_cost = std::numeric_limits<double>::infinity();
            std::size_t best_mid = bounds[h];
            for (std::size_t mid = lo + 1; mid < scan_end; ++mid) {
                const double cost = local_pair_cost(ps, lo, mid, hi);
                if (cost < best_cost) {
                    best_cost = cost;
                    best_mid = mid;
                }
            }

            if (current_cost - best_cost > cfg.epsilon) {
                bounds[h] = best_mid;
                objective += best_cost - current_cost;
                result.objective_trace.push_back(objective);
                improved = true;
            }
        }
        if (cfg.max_iterations != 0 && passes >= cfg.max_iterations) {
            break;
        }
    }

    result.segmentation = std::move(seg);
    result.objective = objective;
    result.iterations = passes;
    result.elapsed = std::chrono::steady_clock::now() - t0;
    return result;
}

} // namespace varseg
