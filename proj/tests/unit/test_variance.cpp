#include <doctest.h>

#include <stdexcept>
#include <random>
#include <vector>

#include "instances.hpp"
#include "naive_oracles.hpp"
#include "varseg/variance.hpp"

using namespace varseg;
using namespace varseg::testsupport;

TEST_SUITE("variance") {

TEST_CASE("row_variance on known rows") {
    const std::vector<double> constant{5, 5, 5, 5};
    CHECK(row_variance(constant) == 0.0);
    const std::vector<double> pair{0, 2};
    CHECK(row_variance(pair) == 1.0);
    const std::vector<double> ramp{1, 2, 3, 4};
    CHECK(row_variance(ramp) == doctest::Approx(1.25).epsilon(1e-12));
}

TEST_CASE("row_variance rejects empty input") {
    CHECK_THROWS_WITH_AS(row_variance(std::span<const double>{}), "empty input",
                         std::invalid_argument);
}

TEST_CASE("matrix_variance sums per-row variances") {
    CHECK(matrix_variance(SignalMatrix::from_rows({{3, 3, 3}, {7, 7, 7}})) == 0.0);
    CHECK(matrix_variance(SignalMatrix::from_rows({{0, 2}})) == 1.0);
    CHECK(matrix_variance(SignalMatrix::from_rows({{0, 2}, {1, 3}})) ==
          doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("segmented_variance on the step row") {
    const SignalMatrix m = SignalMatrix::from_rows({{0, 0, 0, 10, 10, 10}});
    CHECK(segmented_variance(m, Segmentation{{3}, 6}) == 0.0);
    CHECK(segmented_variance(m, Segmentation{{}, 6}) == doctest::Approx(25.0).epsilon(1e-12));
    CHECK(segmented_variance(m, Segmentation{{1, 2, 3, 4, 5}, 6}) == 0.0);
}

TEST_CASE("segmented_variance propagates the validation message") {
    const SignalMatrix m = SignalMatrix::from_rows({{1, 2, 3}});
    CHECK_THROWS_WITH_AS(segmented_variance(m, Segmentation{{2, 1}, 3}),
                         "not strictly increasing", std::invalid_argument);
    CHECK_THROWS_AS(segmented_variance(m, Segmentation{{5}, 3}), std::invalid_argument);
}

TEST_CASE("prefix stats accumulate sums and squares") {
    const SignalMatrix m = SignalMatrix::from_rows({{1, 2}});
    const PrefixStats ps(m);
    CHECK(ps.cum_sum(0, 0) == 0.0);
    CHECK(ps.cum_sum(0, 1) == 1.0);
    CHECK(ps.cum_sum(0, 2) == 3.0);
    CHECK(ps.cum_sq(0, 0) == 0.0);
    CHECK(ps.cum_sq(0, 1) == 1.0);
    CHECK(ps.cum_sq(0, 2) == 5.0);
}

TEST_CASE("prefix stats reconstruct values and stay monotone in squares") {
    std::mt19937_64 rng(11);
    const SignalMatrix m = random_noise_matrix(rng, 3, 20, -50.0, 50.0);
    const PrefixStats ps = build_prefix_stats(m);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            CHECK(ps.cum_sum(i, j + 1) - ps.cum_sum(i, j) ==
                  doctest::Approx(m(i, j)).epsilon(1e-12));
            CHECK(ps.cum_sq(i, j + 1) >= ps.cum_sq(i, j));
        }
    }
}

TEST_CASE("segment_variance_fast matches the naive oracle") {
    std::mt19937_64 rng(12);
    const SignalMatrix m = random_noise_matrix(rng, 3, 120, 0.0, 50.0);
    const PrefixStats ps(m);

    std::uniform_int_distribution<std::size_t> row_dist(0, m.rows() - 1);
    std::uniform_int_distribution<std::size_t> idx_dist(0, m.cols());
    for (int k = 0; k < 300; ++k) {
        const std::size_t row = row_dist(rng);
        std::size_t lo = idx_dist(rng);
        std::size_t hi = idx_dist(rng);
        if (lo == hi) {
            continue;
        }
        if (lo > hi) {
            std::swap(lo, hi);
        }
        const double fast = segment_variance_fast(ps, row, lo, hi);
        const double naive = naive_range_variance(m.row(row), lo, hi);
        CHECK(fast >= 0.0);
        CHECK(close_rel(fast, naive, 1e-9));
    }
}

TEST_CASE("segment_variance_fast edge behavior") {
    const SignalMatrix m = SignalMatrix::from_rows({{4, 4, 4, 4, 9}});
    const PrefixStats ps(m);
    CHECK(segment_variance_fast(ps, 0, 0, 4) == 0.0);
    CHECK(segment_variance_fast(ps, 0, 0, 5) ==
          doctest::Approx(row_variance(m.row(0))).epsilon(1e-12));
    CHECK(segment_variance_fast(ps, 0, 2, 3) == 0.0);
    CHECK_THROWS_WITH_AS(segment_variance_fast(ps, 0, 3, 3), "empty segment query",
                         std::invalid_argument);
    CHECK_THROWS_AS(segment_variance_fast(ps, 0, 2, 6), std::invalid_argument);
    CHECK_THROWS_AS(segment_variance_fast(ps, 1, 0, 2), std::invalid_argument);
}

TEST_CASE("single segment equals the whole-matrix variance") {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 20; ++k) {
        const SignalMatrix m = random_noise_matrix(rng, 1 + k % 4, 5 + k, -10.0, 40.0);
        const double whole = matrix_variance(m);
        const double single = segmented_variance(m, Segmentation{{}, m.cols()});
        CHECK(close_rel(whole, single, 1e-12));
    }
}

TEST_CASE("variances are shift invariant") {
    std::mt19937_64 rng(14);
    const SignalMatrix m = random_noise_matrix(rng, 2, 30, 0.0, 10.0);
    std::vector<double> shifted = m.values();
    for (std::size_t j = 0; j < m.cols(); ++j) {
        shifted[j] += 123.0; // shift row 0 only
    }
    const SignalMatrix ms(std::move(shifted), m.rows(), m.cols());
    const Segmentation seg{{7, 19}, 30};
    CHECK(close_rel(matrix_variance(m), matrix_variance(ms), 1e-9));
    CHECK(close_rel(segmented_variance(m, seg), segmented_variance(ms, seg), 1e-9));
}

TEST_CASE("length-weighted segment variances never grow under refinement") {
    // n_h * variance(segment h) summed over segments is the within-group
    // squared deviation; inserting a boundary cannot raise it.
    std::mt19937_64 rng(15);
    for (int k = 0; k < 200; ++k) {
        InstanceParams p;
        p.sigma_hi = (k % 2 == 0) ? 1.0 : 0.0;
        const auto inst = random_step_instance(rng, p);
        const std::size_t n = inst.matrix.cols();
        std::uniform_int_distribution<std::size_t> s_dist(1, std::min<std::size_t>(4, n - 1));
        const Segmentation seg = random_segmentation(rng, n, s_dist(rng));

        std::vector<std::size_t> with_extra = seg.boundaries;
        std::uniform_int_distribution<std::size_t> pos(1, n - 1);
        std::size_t extra = pos(rng);
        while (std::find(with_extra.begin(), with_extra.end(), extra) != with_extra.end()) {
            extra = pos(rng);
        }
        with_extra.push_back(extra);
        std::sort(with_extra.begin(), with_extra.end());
        const Segmentation refined{with_extra, n};

        auto weighted = [&](const Segmentation& sg) {
            double total = 0.0;
            for (std::size_t h = 0; h < sg.segment_count(); ++h) {
                const std::size_t lo = sg.segment_start(h);
                const std::size_t hi = sg.segment_end(h);
                for (std::size_t i = 0; i < inst.matrix.rows(); ++i) {
                    total += static_cast<double>(hi - lo) *
                             naive_range_variance(inst.matrix.row(i), lo, hi);
                }
            }
            return total;
        };
        CHECK(weighted(refined) <= weighted(seg) + 1e-9 * std::max(1.0, weighted(seg)));
    }
}

TEST_CASE("splitting can raise the unweighted objective") {
    // The objective sums per-segment variances without length weights, so
    // refinement is not monotone: every split of this row costs more than
    // keeping it whole.
    const SignalMatrix m = SignalMatrix::from_rows({{0, 10, 0}});
    const double whole = segmented_variance(m, Segmentation{{}, 3}); // 200/9
    CHECK(whole == doctest::Approx(200.0 / 9.0).epsilon(1e-12));
    CHECK(segmented_variance(m, Segmentation{{1}, 3}) == doctest::Approx(25.0));
    CHECK(segmented_variance(m, Segmentation{{2}, 3}) == doctest::Approx(25.0));
}

} // TEST_SUITE
