#include <doctest.h>

#include <fstream>

#include "pathcast/errors.hpp"
#include "pathcast/raster_io.hpp"
#include "test_support.hpp"

using namespace pathcast;

namespace {

std::filesystem::path write(const testing::TempDir& dir, const std::string& name,
                            const std::string& bytes) {
    const auto path = dir.path() / name;
    std::ofstream out(path, std::ios::binary);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    return path;
}

}  // namespace

TEST_CASE("ascii PGM maps samples onto [0,1] by maxval") {
    testing::TempDir dir("pgm");
    const auto path = write(dir, "a.pgm",
                            "P2\n# comment line\n3 2\n255\n"
                            "255 0 128\n7 13 200\n");
    const ScalarField field = load_scalar_field(path);
    CHECK(field.width() == 3);
    CHECK(field.height() == 2);
    CHECK(field.at(0, 0) == 1.0);
    CHECK(field.at(1, 0) == 0.0);
    CHECK(field.at(2, 0) == doctest::Approx(128.0 / 255.0).epsilon(1e-12));
    CHECK(field.at(2, 1) == doctest::Approx(200.0 / 255.0));
}

TEST_CASE("binary PGM round-trips through the writer") {
    testing::TempDir dir("pgm5");
    ScalarField field(4, 3);
    for (int y = 0; y < 3; ++y)
        for (int x = 0; x < 4; ++x) field.at(x, y) = (y * 4 + x) / 11.0;
    const auto path = dir.path() / "b.pgm";
    write_pgm(field, path);
    const ScalarField back = load_scalar_field(path);
    REQUIRE(back.width() == 4);
    REQUIRE(back.height() == 3);
    for (int y = 0; y < 3; ++y)
        for (int x = 0; x < 4; ++x)
            CHECK(back.at(x, y) == doctest::Approx(field.at(x, y)).epsilon(1.0 / 255.0));
}

TEST_CASE("two-byte binary PGM samples") {
    testing::TempDir dir("pgm16");
    std::string bytes = "P5\n2 1\n65535\n";
    bytes.push_back(static_cast<char>(0xFF));
    bytes.push_back(static_cast<char>(0xFF));
    bytes.push_back(static_cast<char>(0x00));
    bytes.push_back(static_cast<char>(0x01));
    const ScalarField field = load_scalar_field(write(dir, "c.pgm", bytes));
    CHECK(field.at(0, 0) == 1.0);
    CHECK(field.at(1, 0) == doctest::Approx(1.0 / 65535.0));
}

TEST_CASE("malformed PGM inputs are rejected with the file name") {
    testing::TempDir dir("pgmbad");
    CHECK_THROWS_AS(load_scalar_field(write(dir, "t.pgm", "P5\n4 4\n255\nab")), InputError);
    CHECK_THROWS_AS(load_scalar_field(write(dir, "h.pgm", "P2\n-3 2\n255\n0")), InputError);
    CHECK_THROWS_AS(load_scalar_field(write(dir, "m.pgm", "P2\n1 1\n99999\n0")), InputError);
    CHECK_THROWS_AS(load_scalar_field(write(dir, "s.pgm", "P2\n1 1\n255\n300")), InputError);
    CHECK_THROWS_AS(load_scalar_field(dir.path() / "missing.pgm"), InputError);
    try {
        load_scalar_field(write(dir, "named.pgm", "P2\n1 1\n255\n"));
        FAIL("expected an error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("named.pgm") != std::string::npos);
    }
}

TEST_CASE("CSV rasters parse and validate") {
    testing::TempDir dir("csv");
    const ScalarField field =
        load_scalar_field(write(dir, "f.csv", "0,0.25,1\n0.5, 0.75 ,0.125\n"));
    CHECK(field.width() == 3);
    CHECK(field.height() == 2);
    CHECK(field.at(1, 0) == 0.25);
    CHECK(field.at(1, 1) == 0.75);

    CHECK_THROWS_AS(load_scalar_field(write(dir, "range.csv", "0,1.5\n")), InputError);
    CHECK_THROWS_AS(load_scalar_field(write(dir, "ragged.csv", "0,1\n0\n")), InputError);
    CHECK_THROWS_AS(load_scalar_field(write(dir, "junk.csv", "0,zap\n")), InputError);
    CHECK_THROWS_AS(load_scalar_field(write(dir, "empty.csv", "")), InputError);
}

TEST_CASE("CSV writer round-trips values exactly") {
    testing::TempDir dir("csvrt");
    ScalarField field(5, 4);
    std::mt19937_64 rng(21);
    for (double& v : field.values()) v = testing::unit_open(rng);
    const auto path = dir.path() / "rt.csv";
    write_field_csv(field, path);
    CHECK(load_scalar_field(path) == field);
}
