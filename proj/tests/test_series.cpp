#include "singclass/series.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace singclass;

TEST_CASE("binary forms: weights (1,1)") {
    auto c = series_coeffs(SeriesSpec{{}, {1, 1}, 3});
    CHECK(c == std::vector<Int>{1, 2, 3, 4});
}

TEST_CASE("triple (2,3,7): weights (21,14,6), degree 42, order 14") {
    auto c = series_coeffs(SeriesSpec{{42}, {21, 14, 6}, 14});
    for (long long nu = 0; nu <= 14; ++nu) {
        Int expected = (nu == 0 || nu == 6 || nu == 12 || nu == 14) ? 1 : 0;
        CHECK(c[static_cast<std::size_t>(nu)] == expected);
    }
}

TEST_CASE("weights (2,3) to order 6") {
    auto c = series_coeffs(SeriesSpec{{}, {2, 3}, 6});
    CHECK(c == std::vector<Int>{1, 0, 1, 1, 1, 1, 2});
}

TEST_CASE("c_0 = 1 always") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long long> w(1, 25), d(1, 60), k(1, 4);
    for (int i = 0; i < 30; ++i) {
        std::vector<long long> weights;
        long long nw = k(rng) + 1;
        for (long long j = 0; j < nw; ++j) weights.push_back(w(rng));
        auto c = series_coeffs(SeriesSpec{{d(rng)}, weights, 10});
        CHECK(c[0] == 1);
    }
}

TEST_CASE("hypersurface coefficients match the lattice-count oracle") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long long> w(1, 25), d(1, 60), k(2, 4);
    for (int i = 0; i < 25; ++i) {
        std::vector<long long> weights;
        long long nw = k(rng);
        for (long long j = 0; j < nw; ++j) weights.push_back(w(rng));
        long long degree = d(rng);
        auto got = series_coeffs(SeriesSpec{{degree}, weights, 200});
        auto oracle = testutil::hypersurface_dims(weights, degree, 200);
        REQUIRE(got.size() == oracle.size());
        for (std::size_t nu = 0; nu < got.size(); ++nu)
            CHECK(got[nu] == Int(oracle[nu]));
    }
}

TEST_CASE("machine-word and big-integer paths agree") {
    auto fast = series_coeffs<long long>(SeriesSpec{{30}, {15, 10, 6}, 120});
    auto big = series_coeffs<Int>(SeriesSpec{{30}, {15, 10, 6}, 120});
    REQUIRE(fast.size() == big.size());
    for (std::size_t i = 0; i < fast.size(); ++i) CHECK(Int(fast[i]) == big[i]);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(series_coeffs(SeriesSpec{{0}, {1}, 3}), std::invalid_argument);
    CHECK_THROWS_AS(series_coeffs(SeriesSpec{{}, {-2}, 3}), std::invalid_argument);
    CHECK_THROWS_AS(series_coeffs(SeriesSpec{{}, {1}, -1}), std::invalid_argument);
    auto c = series_coeffs(SeriesSpec{{}, {1}, 0});
    CHECK(c == std::vector<Int>{1});
}
