"""Variance-minimizing segmentation of multivariate time-series traces."""

from ._core import (  # noqa: F401
    Algorithm,
    CandidateRange,
    CostGuardError,
    DataError,
    GreedyConfig,
    Orientation,
    PrefixStats,
    PreprocessConfig,
    PreprocessReport,
    RunConfig,
    Segmentation,
    SegmentationResult,
    SignalMatrix,
    SynthSpec,
    __version__,
    benchmark_signal,
    benchmark_signal_spec,
    brute_force_segment,
    build_prefix_stats,
    combination_count,
    emit_plot,
    generate,
    greedy_segment,
    load_csv,
    local_pair_cost,
    matrix_variance,
    offset_reduce,
    peak_to_valley_filter,
    row_variance,
    run,
    segment_variance_fast,
    segmented_variance,
    segmented_variance_fast,
    uniform_presegmentation,
    validate_segmentation,
    write_csv,
)
