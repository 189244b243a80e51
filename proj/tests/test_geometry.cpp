#include <doctest.h>

#include <cmath>
#include <random>

#include "pathcast/errors.hpp"
#include "pathcast/geometry.hpp"
#include "test_support.hpp"

using namespace pathcast;

TEST_CASE("angle normalization wraps into (-pi, pi]") {
    CHECK(Angle(0.0).radians() == 0.0);
    CHECK(Angle(M_PI).radians() == doctest::Approx(M_PI));
    CHECK(Angle(-M_PI).radians() == doctest::Approx(M_PI));  // -pi maps to +pi
    CHECK(Angle(3 * M_PI).radians() == doctest::Approx(M_PI));
    CHECK(Angle(2 * M_PI + 0.25).radians() == doctest::Approx(0.25));
    CHECK(Angle(-7.0).radians() == doctest::Approx(-7.0 + 2 * M_PI));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const double raw = (testing::unit_open(rng) - 0.5) * 50.0;
        const double r = Angle(raw).radians();
        CHECK(r > -M_PI);
        CHECK(r <= M_PI);
    }
}

TEST_CASE("angular difference worked examples") {
    CHECK(angular_difference(Angle(0.5), Angle(0.5)) == 0.0);
    // Wrap-around branch: |a - b| > pi.
    const double a = 3 * M_PI / 4;
    const double b = -3 * M_PI / 4;
    const double expected_wrap = 2 * M_PI - std::fabs(a - b);
    CHECK(angular_difference(Angle(a), Angle(b)) == expected_wrap);
    CHECK(angular_difference(Angle(a), Angle(b)) == doctest::Approx(M_PI / 2).epsilon(1e-12));
    // Direct branch: |a - b| <= pi.
    CHECK(angular_difference(Angle(2.0), Angle(-1.0)) == 3.0);
}

TEST_CASE("angular difference properties") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10000; ++i) {
        const double a = (testing::unit_open(rng) - 0.5) * 2 * M_PI;
        const double b = (testing::unit_open(rng) - 0.5) * 2 * M_PI;
        const Angle aa(a), bb(b);
        const double d = angular_difference(aa, bb);
        CHECK(d >= 0.0);
        CHECK(d <= M_PI);
        CHECK(angular_difference(bb, aa) == d);
        CHECK(angular_difference(aa, aa) == 0.0);
        // 2*pi*k shifts collapse under normalization.
        const int k = static_cast<int>(rng() % 9) - 4;
        CHECK(std::fabs(angular_difference(Angle(a + 2 * M_PI * k), bb) - d) <= 1e-12);
        // Triangle-like bound through a third angle.
        const double c = (testing::unit_open(rng) - 0.5) * 2 * M_PI;
        const Angle cc(c);
        CHECK(angular_difference(aa, cc) <=
              angular_difference(aa, bb) + angular_difference(bb, cc) + 1e-12);
    }
}

TEST_CASE("direction between grid cells, y-down frame") {
    CHECK(direction_between({0, 0}, {1, 0}).radians() == 0.0);
    CHECK(direction_between({0, 0}, {0, 1}).radians() == doctest::Approx(M_PI / 2));
    CHECK(direction_between({0, 0}, {-1, -1}).radians() == doctest::Approx(-3 * M_PI / 4));
    CHECK_THROWS_AS(direction_between({3, 3}, {3, 3}), InputError);
}

TEST_CASE("opposite directions differ by exactly pi") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 2000; ++i) {
        const Position p{static_cast<int>(rng() % 50), static_cast<int>(rng() % 50)};
        Position q{static_cast<int>(rng() % 50), static_cast<int>(rng() % 50)};
        if (p == q) q.x += 1;
        const double diff = angular_difference(direction_between(p, q), direction_between(q, p));
        CHECK(diff == doctest::Approx(M_PI).epsilon(1e-12));
    }
}

TEST_CASE("diagonal distance") {
    CHECK(diagonal_distance(BoundingBox{0, 0, 3, 4}) == 5);
    CHECK(diagonal_distance(BoundingBox{0, 0, 1, 1}) == 1);  // floor(sqrt(2))
    CHECK(diagonal_distance(BoundingBox{0, 0, 8, 6}, 2) == 5);
    CHECK(diagonal_distance(BoundingBox{0, 0, 1, 1}, 4) == 1);  // clamped to >= 1
    CHECK_THROWS_AS(diagonal_distance(BoundingBox{0, 0, 0, 4}), InputError);
    CHECK_THROWS_AS(diagonal_distance(BoundingBox{0, 0, 3, -1}), InputError);
}

TEST_CASE("bounding box center cell") {
    CHECK(BoundingBox{9, 9, 2, 2}.center_cell() == Position{10, 10});
    CHECK(BoundingBox{0, 0, 4, 4}.center_cell(2) == Position{1, 1});
    CHECK(BoundingBox{10, 20, 3, 5}.center_cell() == Position{12, 23});  // rounds .5 up
}

TEST_CASE("path adjacency helper") {
    CHECK(is_eight_connected({{0, 0}, {1, 1}, {1, 2}}));
    CHECK_FALSE(is_eight_connected({{0, 0}, {2, 0}}));
    CHECK_FALSE(is_eight_connected({{0, 0}, {0, 0}}));
    CHECK_FALSE(is_eight_connected({}));
}
