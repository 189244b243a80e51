#ifndef PATHCAST_SYNTH_HPP_
#define PATHCAST_SYNTH_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>

#include "pathcast/scene.hpp"

namespace pathcast {

// Vertical obstacle wall spanning the grid height except for a gap.
struct WallSpec {
    int column = 0;
    int gap_row = 0;
    int gap_height = 1;
};

// Declarative recipe for one synthetic scene. Scenes are desk-scale
// stand-ins for outdoor footage: road strips (reward 1) over terrain
// (intermediate reward), with rectangle and blob obstacles (reward 0).
struct SynthSpec {
    int width = 160;   // cells
    int height = 90;   // cells
    int road_count = 3;
    int rect_count = 6;
    int blob_count = 4;
    // 2x2 on-road obstacles (parked vehicles); placed with enough clearance
    // to always leave a way around, best-effort up to this count.
    int blocker_count = 10;
    int agent_count = 2;
    double terrain_reward = 0.35;
    std::optional<WallSpec> wall;

    void validate() const;  // throws UsageError
};

// Deterministic for a fixed (seed, spec): embeds the obstacle map and the
// derived oracle reward map, and gives every agent a ground-truth
// trajectory from a goal-seeking walker that never enters obstacles.
// Throws InputError when the spec cannot be satisfied after bounded
// rejection sampling.
SceneDescriptor generate_synthetic_scene(std::uint64_t seed, const SynthSpec& spec);

// Writes scene.json + obstacle.pgm + reward.csv + traj_<i>.csv into `dir`,
// the layout evaluate_dataset consumes.
void write_scene_directory(const SceneDescriptor& scene,
                           const std::filesystem::path& dir);

// Stream splitter for deriving per-scene seeds from a base seed.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index);

}  // namespace pathcast

#endif  // PATHCAST_SYNTH_HPP_
