#include "pathcast/reward_map.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "pathcast/errors.hpp"

namespace pathcast {

GridDims planning_grid_dims(const SceneDescriptor& scene, int downsample) {
    if (downsample < 1) throw UsageError("downsample factor must be >= 1");
    return GridDims{(scene.width + downsample - 1) / downsample,
                    (scene.height + downsample - 1) / downsample};
}

namespace {

// Window center coordinates along one axis, plus for each cell the index of
// its nearest center (ties to the smaller coordinate).
struct AxisCenters {
    std::vector<int> centers;
    std::vector<int> nearest;  // per cell, index into centers
};

AxisCenters axis_centers(int extent, int window, int stride) {
    AxisCenters out;
    const int half = window / 2;
    for (int c = half; c < extent; c += stride) {
        out.centers.push_back(c);
    }
    if (out.centers.empty()) {
        out.centers.push_back(std::min(half, extent - 1));
    }
    out.nearest.resize(extent);
    int k = 0;
    for (int cell = 0; cell < extent; ++cell) {
        while (k + 1 < static_cast<int>(out.centers.size()) &&
               std::abs(out.centers[k + 1] - cell) < std::abs(out.centers[k] - cell)) {
            ++k;
        }
        out.nearest[cell] = k;
    }
    return out;
}

}  // namespace

ScalarField assemble_reward_map(const SceneDescriptor& scene,
                                const ObjectRecord& object,
                                const RewardProvider& provider, int window,
                                int stride, int downsample) {
    if (window < 1) throw UsageError("window must be >= 1");
    if (stride < 1 || stride > window) {
        throw UsageError("stride must satisfy 1 <= stride <= window");
    }
    const GridDims dims = planning_grid_dims(scene, downsample);
    const AxisCenters xs = axis_centers(dims.width, window, stride);
    const AxisCenters ys = axis_centers(dims.height, window, stride);

    // Score each window center once.
    ScalarField scores(static_cast<int>(xs.centers.size()),
                       static_cast<int>(ys.centers.size()));
    for (int cy = 0; cy < scores.height(); ++cy) {
        for (int cx = 0; cx < scores.width(); ++cx) {
            const Position center{xs.centers[cx], ys.centers[cy]};
            double value;
            try {
                value = provider.score(object, center);
            } catch (const std::exception& e) {
                throw PlanningError("reward provider failed at window center (" +
                                    std::to_string(center.x) + ", " +
                                    std::to_string(center.y) + "): " + e.what());
            }
            if (!(value >= 0.0 && value <= 1.0)) {
                throw PlanningError("reward provider returned " +
                                    std::to_string(value) + " outside [0, 1]");
            }
            scores.at(cx, cy) = value;
        }
    }

    ScalarField field(dims.width, dims.height);
    for (int y = 0; y < dims.height; ++y) {
        for (int x = 0; x < dims.width; ++x) {
            field.at(x, y) = scores.at(xs.nearest[x], ys.nearest[y]);
        }
    }
    return field;
}

Angle trajectory_ground_truth_angle(const PathSeq& trajectory, std::size_t index) {
    if (trajectory.size() < 2 || index + 1 >= trajectory.size()) {
        throw InputError("trajectory index out of range");
    }
    const Position from = trajectory[index];
    for (std::size_t i = index + 1; i < trajectory.size(); ++i) {
        if (!(trajectory[i] == from)) {
            return direction_between(from, trajectory[i]);
        }
    }
    throw InputError("remaining trajectory points are identical; direction undefined");
}

double orientation_loss(Angle ground_truth, Angle estimate) {
    const double d = angular_difference(ground_truth, estimate);
    return d * d;
}

}  // namespace pathcast
