#ifndef PATHCAST_PROVIDERS_HPP_
#define PATHCAST_PROVIDERS_HPP_

#include <memory>
#include <string>

#include "pathcast/scalar_field.hpp"
#include "pathcast/scene.hpp"

namespace pathcast {

// Deterministic stand-in for a trained spatial matching model: scores how
// plausibly the object occupies the window centered at a grid cell.
// Implementations must be safe to call concurrently.
class RewardProvider {
public:
    virtual ~RewardProvider() = default;

    // Result lies in [0, 1].
    virtual double score(const ObjectRecord& object, Position window_center) const = 0;
};

// Looks the score up in a precomputed reward map at grid resolution.
class FileBackedReward final : public RewardProvider {
public:
    explicit FileBackedReward(ScalarField grid_reward);
    double score(const ObjectRecord& object, Position window_center) const override;

private:
    ScalarField reward_;
};

// 1 minus the obstacle fraction under the window (clipped to the grid).
class OccupancyOracleReward final : public RewardProvider {
public:
    OccupancyOracleReward(ScalarField grid_obstacles, int window);
    double score(const ObjectRecord& object, Position window_center) const override;

private:
    ScalarField obstacles_;  // {0,1} values
    int window_;
};

class ConstantReward final : public RewardProvider {
public:
    explicit ConstantReward(double value);
    double score(const ObjectRecord& object, Position window_center) const override;

private:
    double value_;
};

// Deterministic stand-in for a trained orientation model: the object's
// facing heading, normalized into (-pi, +pi].
class OrientationProvider {
public:
    virtual ~OrientationProvider() = default;
    virtual Angle estimate(const ObjectRecord& object) const = 0;
};

// Reads the orientation declared in the scene descriptor.
class DeclaredOrientation final : public OrientationProvider {
public:
    Angle estimate(const ObjectRecord& object) const override;
};

// Heading of the first distinct ground-truth trajectory step.
class TrajectoryOracleOrientation final : public OrientationProvider {
public:
    Angle estimate(const ObjectRecord& object) const override;
};

class FixedOrientation final : public OrientationProvider {
public:
    explicit FixedOrientation(Angle angle) : angle_(angle) {}
    Angle estimate(const ObjectRecord& object) const override;

private:
    Angle angle_;
};

// Provider selection shared by the CLI, the evaluation harness and the
// Python bindings.
//   reward: "auto" (file-backed when the scene has a reward map, otherwise
//           occupancy oracle), "file", "occupancy", "constant"
//   orientation: "auto" (declared when present, otherwise trajectory
//                oracle), "declared", "trajectory", "fixed"
struct ProviderChoice {
    std::string reward = "auto";
    double constant_value = 1.0;
    std::string orientation = "auto";
    double fixed_theta = 0.0;
};

struct ResolvedProviders {
    std::unique_ptr<RewardProvider> reward;
    std::unique_ptr<OrientationProvider> orientation;
    std::string reward_mode;       // resolved, for provenance
    std::string orientation_mode;  // resolved, for provenance
};

ResolvedProviders make_providers(const SceneDescriptor& scene,
                                 const ObjectRecord& object,
                                 const ProviderChoice& choice, int downsample,
                                 int occupancy_window);

}  // namespace pathcast

#endif  // PATHCAST_PROVIDERS_HPP_
