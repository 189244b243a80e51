#include <doctest.h>

#include <fstream>

#include "pathcast/errors.hpp"
#include "pathcast/raster_io.hpp"
#include "pathcast/scalar_field.hpp"
#include "pathcast/scene.hpp"
#include "test_support.hpp"

using namespace pathcast;

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

// Minimal valid scene on disk: 20x10 raster, one object.
std::filesystem::path make_scene(const testing::TempDir& dir, const std::string& json) {
    write_pgm(ScalarField(20, 10, 1.0), dir.path() / "reward.pgm");
    const auto path = dir.path() / "scene.json";
    write_text(path, json);
    return path;
}

}  // namespace

TEST_CASE("minimal descriptor round-trips") {
    testing::TempDir dir("scene");
    const auto path = make_scene(dir, R"({
      "scene_id": "s1", "width": 20, "height": 10,
      "reward_map": "reward.pgm",
      "objects": [{"bbox": [2, 2, 4, 3]}]
    })");
    const SceneDescriptor scene = load_scene(path);
    CHECK(scene.scene_id == "s1");
    CHECK(scene.width == 20);
    CHECK(scene.height == 10);
    REQUIRE(scene.objects.size() == 1);
    CHECK(scene.objects[0].box == BoundingBox{2, 2, 4, 3});
    CHECK_FALSE(scene.objects[0].orientation.has_value());
    CHECK_FALSE(scene.objects[0].trajectory.has_value());
    REQUIRE(scene.reward_field.has_value());
    CHECK(scene.reward_field->width() == 20);
}

TEST_CASE("raster dimension mismatch is reported") {
    testing::TempDir dir("dims");
    write_pgm(ScalarField(5, 5, 1.0), dir.path() / "reward.pgm");
    const auto path = dir.path() / "scene.json";
    write_text(path, R"({"scene_id": "s", "width": 20, "height": 10,
                         "reward_map": "reward.pgm", "objects": []})");
    try {
        load_scene(path);
        FAIL("expected a dimension mismatch");
    } catch (const InputError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("5x5") != std::string::npos);
        CHECK(msg.find("20x10") != std::string::npos);
    }
}

TEST_CASE("bounding box outside the scene is rejected") {
    testing::TempDir dir("bbox");
    const auto path = make_scene(dir, R"({
      "scene_id": "s", "width": 20, "height": 10,
      "reward_map": "reward.pgm",
      "objects": [{"bbox": [18, 8, 5, 5]}]
    })");
    try {
        load_scene(path);
        FAIL("expected a range error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("objects[0]") != std::string::npos);
    }
}

TEST_CASE("unknown fields are rejected") {
    testing::TempDir dir("unknown");
    const auto top = make_scene(dir, R"({
      "scene_id": "s", "width": 20, "height": 10,
      "reward_map": "reward.pgm", "objects": [], "extra": 1
    })");
    CHECK_THROWS_AS(load_scene(top), InputError);
    const auto nested = make_scene(dir, R"({
      "scene_id": "s", "width": 20, "height": 10,
      "reward_map": "reward.pgm",
      "objects": [{"bbox": [0, 0, 2, 2], "speed": 3}]
    })");
    CHECK_THROWS_AS(load_scene(nested), InputError);
}

TEST_CASE("a raster reference is required") {
    testing::TempDir dir("noref");
    const auto path = dir.path() / "scene.json";
    write_text(path, R"({"scene_id": "s", "width": 4, "height": 4, "objects": []})");
    CHECK_THROWS_AS(load_scene(path), InputError);
}

TEST_CASE("trajectories load with optional header and validate") {
    testing::TempDir dir("traj");
    write_text(dir.path() / "t.csv", "x,y\n3,3\n4,3\n5,4\n");
    const auto path = make_scene(dir, R"({
      "scene_id": "s", "width": 20, "height": 10,
      "reward_map": "reward.pgm",
      "objects": [{"bbox": [2, 2, 3, 3], "trajectory": "t.csv", "orientation": 0.5}]
    })");
    const SceneDescriptor scene = load_scene(path);
    REQUIRE(scene.objects[0].trajectory.has_value());
    CHECK(scene.objects[0].trajectory->size() == 3);
    CHECK(scene.objects[0].trajectory->at(2) == Position{5, 4});
    CHECK(scene.objects[0].orientation->radians() == doctest::Approx(0.5));

    // Headerless form parses the same way.
    write_text(dir.path() / "p.csv", "1,2\n3,4\n");
    const PathSeq plain = load_trajectory_csv(dir.path() / "p.csv");
    CHECK(plain == PathSeq{{1, 2}, {3, 4}});
}

TEST_CASE("trajectory starting far from the box is rejected") {
    testing::TempDir dir("far");
    write_text(dir.path() / "t.csv", "19,9\n18,9\n");
    const auto path = make_scene(dir, R"({
      "scene_id": "s", "width": 20, "height": 10,
      "reward_map": "reward.pgm",
      "objects": [{"bbox": [0, 0, 2, 2], "trajectory": "t.csv"}]
    })");
    CHECK_THROWS_AS(load_scene(path), InputError);
}

TEST_CASE("trajectory writer round-trips") {
    testing::TempDir dir("trajrt");
    const PathSeq traj{{0, 0}, {1, 1}, {2, 1}, {3, 2}};
    write_trajectory_csv(traj, dir.path() / "rt.csv");
    CHECK(load_trajectory_csv(dir.path() / "rt.csv") == traj);
}

TEST_CASE("obstacle maps binarize at 0.5 on load") {
    testing::TempDir dir("binarize");
    ScalarField raw(3, 1);
    raw.at(0, 0) = 0.2;
    raw.at(1, 0) = 0.6;
    raw.at(2, 0) = 1.0;
    write_pgm(raw, dir.path() / "obstacle.pgm");
    const auto path = dir.path() / "scene.json";
    write_text(path, R"({"scene_id": "s", "width": 3, "height": 1,
                         "obstacle_map": "obstacle.pgm", "objects": []})");
    const SceneDescriptor scene = load_scene(path);
    REQUIRE(scene.obstacle_field.has_value());
    CHECK(scene.obstacle_field->at(0, 0) == 0.0);
    CHECK(scene.obstacle_field->at(1, 0) == 1.0);
    CHECK(scene.obstacle_field->at(2, 0) == 1.0);
}
