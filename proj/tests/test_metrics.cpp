#include <doctest.h>

#include <cmath>
#include <random>

#include "pathcast/errors.hpp"
#include "pathcast/metrics.hpp"
#include "test_support.hpp"

using namespace pathcast;

namespace {

PathSeq random_points(std::mt19937_64& rng, int max_count) {
    PathSeq pts;
    const int count = 1 + static_cast<int>(rng() % max_count);
    for (int i = 0; i < count; ++i) {
        pts.push_back(Position{static_cast<int>(rng() % 100),
                               static_cast<int>(rng() % 100)});
    }
    return pts;
}

}  // namespace

TEST_CASE("mhd worked examples") {
    const PathSeq a{{0, 0}, {2, 0}};
    const PathSeq b{{0, 1}};
    CHECK(mhd(a, a) == 0.0);
    CHECK(mhd({{0, 0}}, {{3, 4}}) == 5.0);
    CHECK(mhd(a, b) == doctest::Approx(1.61803).epsilon(1e-5));
    CHECK(mhd(a, b) == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-12));
    CHECK_THROWS_AS(mhd({}, b), InputError);
    CHECK_THROWS_AS(mhd(a, {}), InputError);
}

TEST_CASE("mhd is symmetric and matches the brute-force definition") {
    std::mt19937_64 rng(201);
    for (int trial = 0; trial < 1000; ++trial) {
        const PathSeq a = random_points(rng, 20);
        const PathSeq b = random_points(rng, 20);
        const double forward = mhd(a, b);
        CHECK(std::fabs(forward - mhd(b, a)) <= 1e-12);
        CHECK(std::fabs(forward - testing::brute_force_mhd(a, b)) < 1e-9);
        CHECK(forward >= 0.0);
    }
}

TEST_CASE("mhd vanishes exactly on equal point sets") {
    // Paths visiting the same cells in different orders are equal as sets.
    const PathSeq a{{1, 1}, {2, 2}, {3, 3}};
    const PathSeq b{{3, 3}, {1, 1}, {2, 2}, {1, 1}};
    CHECK(mhd(a, b) == 0.0);
}

TEST_CASE("top-n average handles short prediction sets") {
    PredictionSet preds;
    const PathSeq gt{{0, 0}, {1, 0}};
    preds.paths = {gt, gt, gt};
    preds.lengths = {0.1, 0.2, 0.3};
    const TopNAverage exact = top_n_average(gt, preds, 3);
    CHECK(exact.value == 0.0);
    CHECK(exact.count == 3);

    // Two predictions at MHD 1 and 3 average to 2.
    PredictionSet two;
    two.paths = {PathSeq{{0, 1}, {1, 1}}, PathSeq{{0, 3}, {1, 3}}};
    two.lengths = {0.1, 0.2};
    const TopNAverage avg = top_n_average(gt, two, 2);
    CHECK(avg.value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(avg.count == 2);

    // Asking for five with three available averages the available set.
    PredictionSet three;
    three.paths = {PathSeq{{0, 1}, {1, 1}}, PathSeq{{0, 2}, {1, 2}},
                   PathSeq{{0, 3}, {1, 3}}};
    three.lengths = {0.1, 0.2, 0.3};
    const TopNAverage partial = top_n_average(gt, three, 5);
    CHECK(partial.value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(partial.count == 3);

    CHECK_THROWS_AS(top_n_average(gt, PredictionSet{}, 3), InputError);
    CHECK_THROWS_AS(top_n_average(gt, three, 0), UsageError);
}

TEST_CASE("replacing a prediction with the ground truth cannot hurt the average") {
    std::mt19937_64 rng(207);
    for (int trial = 0; trial < 200; ++trial) {
        const PathSeq gt = random_points(rng, 10);
        PredictionSet preds;
        for (int k = 0; k < 5; ++k) {
            preds.paths.push_back(random_points(rng, 10));
            preds.lengths.push_back(k * 0.1);
        }
        const double before = top_n_average(gt, preds, 5).value;
        PredictionSet improved = preds;
        improved.paths[static_cast<std::size_t>(rng() % 5)] = gt;
        const double after = top_n_average(gt, improved, 5).value;
        CHECK(after <= before + 1e-12);
    }
}

TEST_CASE("the best top-k distance bounds the top-n average from below") {
    std::mt19937_64 rng(211);
    for (int trial = 0; trial < 200; ++trial) {
        const PathSeq gt = random_points(rng, 10);
        PredictionSet preds;
        const int m = 1 + static_cast<int>(rng() % 10);
        for (int k = 0; k < m; ++k) {
            preds.paths.push_back(random_points(rng, 10));
            preds.lengths.push_back(k * 0.1);
        }
        const int n = 1 + static_cast<int>(rng() % 10);
        const TopNAverage avg = top_n_average(gt, preds, n);
        double best = std::numeric_limits<double>::infinity();
        for (int k = 0; k < avg.count; ++k) best = std::min(best, mhd(gt, preds.paths[k]));
        CHECK(best <= avg.value + 1e-12);
    }
}
