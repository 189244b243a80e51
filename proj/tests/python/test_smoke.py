"""Smoke tests for the pathcast extension module."""

import math

import numpy as np
import pytest

import pathcast as pc


def test_angle_operations():
    assert pc.angular_difference(0.5, 0.5) == 0.0
    assert pc.angular_difference(2.0, -1.0) == 3.0
    assert pc.angular_difference(3 * math.pi / 4, -3 * math.pi / 4) == pytest.approx(
        math.pi / 2, abs=1e-12
    )
    assert pc.wrap_angle(3 * math.pi) == pytest.approx(math.pi)
    assert pc.direction_between((0, 0), (0, 1)) == pytest.approx(math.pi / 2)
    assert pc.orientation_loss(0.0, math.pi) == pytest.approx(math.pi**2)
    assert pc.diagonal_distance(3, 4) == 5
    assert pc.diagonal_distance(8, 6, downsample=2) == 5


def test_cost_map_conversion():
    reward = np.array([[0.5, 1.0, 0.0]])
    cost = pc.to_cost_map(reward, alpha=-10.0)
    assert cost.shape == reward.shape
    assert cost[0, 0] == 0.5
    assert cost[0, 1] == pytest.approx(0.0066929, abs=1e-6)
    assert cost[0, 2] == pytest.approx(0.9933071, abs=1e-6)


def test_mhd():
    assert pc.mhd([(0, 0)], [(3, 4)]) == 5.0
    assert pc.mhd([(0, 0), (2, 0)], [(0, 1)]) == pytest.approx(1.61803, abs=1e-5)
    with pytest.raises(ValueError):
        pc.mhd([], [(0, 0)])


def test_synthetic_scene_and_predict():
    scene = pc.generate_synthetic_scene(7, width=96, height=64, agents=2)
    assert scene.width == 96
    assert scene.obstacle_map.shape == (64, 96)
    assert len(scene.objects) == 2
    trajectory = scene.objects[0].trajectory
    assert trajectory is not None and len(trajectory) >= 2

    prediction = pc.predict(scene, object_index=0, top=10)
    assert 1 <= len(prediction.paths) <= 10
    assert prediction.lengths == sorted(prediction.lengths)
    assert prediction.reward_map.shape == (64, 96)
    # Paths start at the object's box center and end on the border.
    x0, y0 = prediction.start
    for path in prediction.paths:
        assert path[0] == (x0, y0)
        ex, ey = path[-1]
        assert ex in (0, 95) or ey in (0, 63)

    value, count = pc.top_n_average(trajectory, prediction, 5)
    assert count == 5
    assert value >= 0.0

    baseline = pc.straight_line_baseline(scene, object_index=0)
    assert len(baseline) >= 1

    audit = pc.path_cost_audit(
        prediction.paths[0], prediction.cost_map, prediction.theta_esti,
        prediction.probe_distance,
    )
    assert audit[2] >= audit[0]


def test_determinism():
    a = pc.generate_synthetic_scene(3)
    b = pc.generate_synthetic_scene(3)
    assert np.array_equal(a.obstacle_map, b.obstacle_map)
    pa = pc.predict(a, 0)
    pb = pc.predict(b, 0)
    assert pa.paths == pb.paths
    assert pa.lengths == pb.lengths


def test_dataset_roundtrip(tmp_path):
    scene = pc.generate_synthetic_scene(11, width=64, height=48)
    pc.write_scene_directory(scene, str(tmp_path / "scene_0000"))
    loaded = pc.load_scene(str(tmp_path / "scene_0000" / "scene.json"))
    assert loaded.scene_id == scene.scene_id
    assert np.array_equal(loaded.reward_map, scene.reward_map)

    report = pc.evaluate_dataset(str(tmp_path), methods=["planner", "straightline"])
    methods = {row["method"] for row in report["rows"]}
    assert methods == {"planner", "straightline"}
    assert report["totals"][0]["samples"] >= 1
    assert not report["errors"]
