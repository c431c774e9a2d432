#pragma once

#include <cstdint>
#include <optional>

#include "varseg/types.hpp"
#include "varseg/variance.hpp"

namespace varseg {

/// Candidate positions considered when one boundary is re-placed.
/// two_sided scans the full open interval between the neighboring
/// boundaries; one_sided only scans left of (and including) the current
/// position, kept for fidelity experiments.
enum class CandidateRange {
    two_sided,
    one_sided,
};

struct GreedyConfig {
    /// Minimum absolute objective improvement for a boundary move to be
    /// accepted. Must be > 0; guarantees termination under float noise.
    double epsilon = 1e-12;
    /// Cap on outer-loop passes; 0 means unlimited.
    std::uint64_t max_iterations = 0;
    /// Starting segmentation; defaults to uniform_presegmentation.
    std::optional<Segmentation> initial;
    CandidateRange candidates = CandidateRange::two_sided;
};

/// Exhaustive searches with more candidate boundary placements than
/// this are refused unless forced.
inline constexpr double kBruteForceGuard = 1e9;

/// Binomial coefficient C(n, k) as a double, +inf on overflow.
double combination_count(std::size_t n, std::size_t k);

/// Global minimum of the segmentation objective over every valid
/// placement of s-1 boundaries, found by enumerating all
/// C(n-1, s-1) combinations in lexicographic order with incremental
/// prefix-stat evaluation. Ties resolve to the lexicographically
/// smallest boundary vector. `iterations` reports the combination
/// count. Cost grows as C(n-1, s-1); above kBruteForceGuard the call
/// throws CostGuardError unless `force` is set.
SegmentationResult brute_force_segment(const SignalMatrix& m, std::size_t s, bool force = false);

/// Local-search heuristic: starting from an initial segmentation,
/// sweeps the interior boundaries left to right, moving each to the
/// candidate position minimizing the variance of its two adjacent
/// segments (summed over rows), and repeats until a full pass yields no
/// move improving the objective by more than epsilon. Updated positions
/// are used immediately within a pass; candidate ties break toward the
/// smallest index. Deterministic for identical inputs.
SegmentationResult greedy_segment(const SignalMatrix& m, std::size_t s,
                                  const GreedyConfig& cfg = {});

/// The quantity one greedy step minimizes: summed over rows, the
/// variance of [lo, mid) plus the variance of [mid, hi). Requires
/// lo < mid < hi <= sample count.
double local_pair_cost(const PrefixStats& ps, std::size_t lo, std::size_t mid, std::size_t hi);

} // namespace varseg
