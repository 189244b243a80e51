#ifndef PATHCAST_REWARD_MAP_HPP_
#define PATHCAST_REWARD_MAP_HPP_

#include "pathcast/providers.hpp"
#include "pathcast/scene.hpp"

namespace pathcast {

// Grid dimensions of the planning grid for a scene at a downsample factor.
struct GridDims {
    int width = 0;
    int height = 0;
};
GridDims planning_grid_dims(const SceneDescriptor& scene, int downsample);

// Scores an overlapped sliding window over the scene and expands the scores
// to the full planning grid: window centers are spaced `stride` cells apart
// starting at window/2, and every other cell takes the score of its nearest
// center (ties go to the smallest center, x then y; with the separable
// center lattice this is also the row-major smallest).
ScalarField assemble_reward_map(const SceneDescriptor& scene,
                                const ObjectRecord& object,
                                const RewardProvider& provider, int window,
                                int stride, int downsample = 1);

// Ground-truth heading at `index`: direction to the next distinct point,
// skipping consecutive duplicates.
Angle trajectory_ground_truth_angle(const PathSeq& trajectory, std::size_t index);

// Squared angular difference, in [0, pi^2].
double orientation_loss(Angle ground_truth, Angle estimate);

}  // namespace pathcast

#endif  // PATHCAST_REWARD_MAP_HPP_
