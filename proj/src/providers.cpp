#include "pathcast/providers.hpp"

#include <algorithm>

#include "pathcast/errors.hpp"

namespace pathcast {

FileBackedReward::FileBackedReward(ScalarField grid_reward)
    : reward_(std::move(grid_reward)) {
    if (!values_in_range(reward_, 0.0, 1.0)) {
        throw InputError("file-backed reward map has values outside [0, 1]");
    }
}

double FileBackedReward::score(const ObjectRecord&, Position center) const {
    if (!reward_.in_bounds(center)) {
        throw InputError("reward lookup outside the grid at (" +
                         std::to_string(center.x) + ", " +
                         std::to_string(center.y) + ")");
    }
    return reward_.at(center);
}

OccupancyOracleReward::OccupancyOracleReward(ScalarField grid_obstacles, int window)
    : obstacles_(std::move(grid_obstacles)), window_(window) {
    if (window_ < 1) {
        throw InputError("occupancy oracle window must be >= 1");
    }
}

double OccupancyOracleReward::score(const ObjectRecord&, Position center) const {
    if (!obstacles_.in_bounds(center)) {
        throw InputError("occupancy lookup outside the grid at (" +
                         std::to_string(center.x) + ", " +
                         std::to_string(center.y) + ")");
    }
    const int half = window_ / 2;
    const int x0 = std::max(center.x - half, 0);
    const int y0 = std::max(center.y - half, 0);
    const int x1 = std::min(center.x - half + window_, obstacles_.width());
    const int y1 = std::min(center.y - half + window_, obstacles_.height());
    int occupied = 0;
    int total = 0;
    for (int y = y0; y < y1; ++y) {
        for (int x = x0; x < x1; ++x) {
            occupied += obstacles_.at(x, y) != 0.0 ? 1 : 0;
            ++total;
        }
    }
    return 1.0 - static_cast<double>(occupied) / total;
}

ConstantReward::ConstantReward(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw InputError("constant reward must lie in [0, 1]");
    }
}

double ConstantReward::score(const ObjectRecord&, Position) const {
    return value_;
}

Angle DeclaredOrientation::estimate(const ObjectRecord& object) const {
    if (!object.orientation) {
        throw InputError("object declares no orientation");
    }
    return *object.orientation;
}

Angle TrajectoryOracleOrientation::estimate(const ObjectRecord& object) const {
    if (!object.trajectory || object.trajectory->size() < 2) {
        throw InputError("object has no usable ground-truth trajectory");
    }
    const PathSeq& traj = *object.trajectory;
    const Position start = traj.front();
    for (std::size_t i = 1; i < traj.size(); ++i) {
        if (!(traj[i] == start)) {
            return direction_between(start, traj[i]);
        }
    }
    throw InputError("trajectory points are all identical; direction undefined");
}

Angle FixedOrientation::estimate(const ObjectRecord&) const { return angle_; }

ResolvedProviders make_providers(const SceneDescriptor& scene,
                                 const ObjectRecord& object,
                                 const ProviderChoice& choice, int downsample,
                                 int occupancy_window) {
    ResolvedProviders out;

    std::string reward_mode = choice.reward;
    if (reward_mode == "auto") {
        if (scene.reward_field) {
            reward_mode = "file";
        } else if (scene.obstacle_field) {
            reward_mode = "occupancy";
        } else {
            throw InputError("scene '" + scene.scene_id +
                             "' has neither a reward map nor an obstacle map");
        }
    }
    if (reward_mode == "file") {
        if (!scene.reward_field) {
            throw InputError("scene '" + scene.scene_id + "' has no reward map");
        }
        out.reward = std::make_unique<FileBackedReward>(
            downsample_mean(*scene.reward_field, downsample));
    } else if (reward_mode == "occupancy") {
        if (!scene.obstacle_field) {
            throw InputError("scene '" + scene.scene_id + "' has no obstacle map");
        }
        out.reward = std::make_unique<OccupancyOracleReward>(
            binarize(downsample_mean(*scene.obstacle_field, downsample)),
            occupancy_window);
    } else if (reward_mode == "constant") {
        out.reward = std::make_unique<ConstantReward>(choice.constant_value);
    } else {
        throw UsageError("unknown reward provider '" + reward_mode + "'");
    }
    out.reward_mode = reward_mode;

    std::string orientation_mode = choice.orientation;
    if (orientation_mode == "auto") {
        orientation_mode = object.orientation ? "declared" : "trajectory";
    }
    if (orientation_mode == "declared") {
        out.orientation = std::make_unique<DeclaredOrientation>();
    } else if (orientation_mode == "trajectory") {
        out.orientation = std::make_unique<TrajectoryOracleOrientation>();
    } else if (orientation_mode == "fixed") {
        out.orientation = std::make_unique<FixedOrientation>(Angle(choice.fixed_theta));
    } else {
        throw UsageError("unknown orientation provider '" + orientation_mode + "'");
    }
    out.orientation_mode = orientation_mode;
    return out;
}

}  // namespace pathcast
