#include <doctest.h>

#include "pathcast/errors.hpp"
#include "pathcast/scalar_field.hpp"

using namespace pathcast;

TEST_CASE("construction and bounds") {
    const ScalarField field(4, 3, 0.25);
    CHECK(field.size() == 12);
    CHECK(field.at(3, 2) == 0.25);
    CHECK(field.in_bounds(0, 0));
    CHECK_FALSE(field.in_bounds(4, 0));
    CHECK_FALSE(field.in_bounds(0, -1));
    CHECK_THROWS_AS(ScalarField(0, 3), InputError);
}

TEST_CASE("range check helper") {
    ScalarField field(2, 2, 0.5);
    CHECK(values_in_range(field, 0.0, 1.0));
    field.at(1, 1) = 1.5;
    CHECK_FALSE(values_in_range(field, 0.0, 1.0));
}

TEST_CASE("block-mean downsampling, including ragged edges") {
    // 5x3 field, factor 2 -> 3x2; the right column and bottom row average
    // partial blocks.
    ScalarField field(5, 3);
    for (int y = 0; y < 3; ++y)
        for (int x = 0; x < 5; ++x) field.at(x, y) = y * 5 + x;
    const ScalarField out = downsample_mean(field, 2);
    REQUIRE(out.width() == 3);
    REQUIRE(out.height() == 2);
    CHECK(out.at(0, 0) == doctest::Approx((0 + 1 + 5 + 6) / 4.0));
    CHECK(out.at(1, 0) == doctest::Approx((2 + 3 + 7 + 8) / 4.0));
    CHECK(out.at(2, 0) == doctest::Approx((4 + 9) / 2.0));
    CHECK(out.at(0, 1) == doctest::Approx((10 + 11) / 2.0));
    CHECK(out.at(2, 1) == doctest::Approx(14.0));

    CHECK(downsample_mean(field, 1) == field);
    CHECK_THROWS_AS(downsample_mean(field, 0), InputError);
}

TEST_CASE("binarize thresholds at one half by default") {
    ScalarField field(3, 1);
    field.at(0, 0) = 0.49;
    field.at(1, 0) = 0.5;
    field.at(2, 0) = 0.51;
    const ScalarField out = binarize(field);
    CHECK(out.at(0, 0) == 0.0);
    CHECK(out.at(1, 0) == 1.0);
    CHECK(out.at(2, 0) == 1.0);
}
