#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "varseg/types.hpp"

using namespace varseg;

TEST_SUITE("core") {

TEST_CASE("validate_segmentation accepts a well-formed split") {
    CHECK(!validate_segmentation(Segmentation{{30, 70}, 100}, 100));
    CHECK(!validate_segmentation(Segmentation{{}, 100}, 100));
    CHECK(!validate_segmentation(Segmentation{{1, 2, 3}, 4}, 4));
}

TEST_CASE("validate_segmentation names the first violated rule") {
    auto v = validate_segmentation(Segmentation{{70, 30}, 100}, 100);
    REQUIRE(v.has_value());
    CHECK(v->find("not strictly increasing") != std::string::npos);

    v = validate_segmentation(Segmentation{{100}, 100}, 100);
    REQUIRE(v.has_value());
    CHECK(v->find("out of range") != std::string::npos);

    v = validate_segmentation(Segmentation{{0}, 100}, 100);
    REQUIRE(v.has_value());
    CHECK(v->find("out of range") != std::string::npos);

    v = validate_segmentation(Segmentation{{30, 30}, 100}, 100);
    REQUIRE(v.has_value());
    CHECK(v->find("not strictly increasing") != std::string::npos);

    v = validate_segmentation(Segmentation{{10}, 50}, 100);
    REQUIRE(v.has_value());
    CHECK(v->find("mismatch") != std::string::npos);
}

TEST_CASE("uniform_presegmentation places boundaries at round(h*n/s)") {
    CHECK(uniform_presegmentation(100, 5).boundaries == std::vector<std::size_t>{20, 40, 60, 80});
    CHECK(uniform_presegmentation(10, 3).boundaries == std::vector<std::size_t>{3, 7});
    CHECK(uniform_presegmentation(5, 1).boundaries.empty());
    CHECK(uniform_presegmentation(4, 4).boundaries == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("uniform_presegmentation rejects impossible counts") {
    CHECK_THROWS_WITH_AS(uniform_presegmentation(5, 6), "more segments than samples",
                         std::invalid_argument);
    CHECK_THROWS_AS(uniform_presegmentation(5, 0), std::invalid_argument);
}

TEST_CASE("uniform_presegmentation is always valid with near-equal lengths") {
    for (std::size_t n = 1; n <= 64; ++n) {
        for (std::size_t s = 1; s <= n; ++s) {
            const Segmentation seg = uniform_presegmentation(n, s);
            CHECK(!validate_segmentation(seg, n));
            CHECK(seg.segment_count() == s);
            std::size_t total = 0;
            std::size_t min_len = n, max_len = 0;
            for (std::size_t h = 0; h < s; ++h) {
                const std::size_t len = seg.segment_end(h) - seg.segment_start(h);
                total += len;
                min_len = std::min(min_len, len);
                max_len = std::max(max_len, len);
            }
            CHECK(total == n);
            CHECK(max_len - min_len <= 1);
        }
    }
}

TEST_CASE("SignalMatrix enforces its invariants") {
    CHECK_THROWS_AS(SignalMatrix({}, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(SignalMatrix({1.0, 2.0, 3.0}, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(SignalMatrix({1.0, std::nan("")}, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(SignalMatrix({1.0, 2.0}, 1, 2, {"a", "b"}), std::invalid_argument);
    CHECK_THROWS_AS(SignalMatrix::from_rows({{1.0, 2.0}, {3.0}}), std::invalid_argument);

    const SignalMatrix m = SignalMatrix::from_rows({{1.0, 2.0}, {3.0, 4.0}}, {"p1", "p2"});
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 2);
    CHECK(m(1, 0) == 3.0);
    CHECK(m.row(0)[1] == 2.0);
    CHECK(m.row_labels()[1] == "p2");
}

} // TEST_SUITE
