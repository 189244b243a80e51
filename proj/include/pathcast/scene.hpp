#ifndef PATHCAST_SCENE_HPP_
#define PATHCAST_SCENE_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pathcast/geometry.hpp"
#include "pathcast/scalar_field.hpp"

namespace pathcast {

struct ObjectRecord {
    BoundingBox box;
    std::optional<Angle> orientation;
    std::optional<std::string> trajectory_ref;
    std::optional<PathSeq> trajectory;  // ground truth, scene raster pixels
};

// A scene's geometry, raster references and objects. Rasters referenced
// from disk are resolved into the in-memory fields on load; synthetic
// scenes carry the fields directly with no refs.
struct SceneDescriptor {
    std::string scene_id;
    int width = 0;   // pixels
    int height = 0;  // pixels
    std::optional<std::string> reward_map_ref;
    std::optional<std::string> obstacle_map_ref;
    std::optional<ScalarField> reward_field;    // values in [0,1]
    std::optional<ScalarField> obstacle_field;  // binarized to {0,1}
    std::vector<ObjectRecord> objects;
};

// Parses and validates a scene descriptor JSON document. Referenced rasters
// are loaded relative to the document's directory and checked against the
// declared dimensions; obstacle maps are binarized at 0.5. Unknown JSON
// fields are rejected.
SceneDescriptor load_scene(const std::filesystem::path& path);

// One "x,y" integer pair per line, optional single "x,y" header.
PathSeq load_trajectory_csv(const std::filesystem::path& path);
void write_trajectory_csv(const PathSeq& trajectory, const std::filesystem::path& path);

// Serializes the descriptor back to the scene JSON schema (refs only;
// in-memory fields are written separately).
std::string scene_to_json(const SceneDescriptor& scene);

// Structural checks shared by load_scene and the synthetic generator:
// boxes inside the raster, rasters matching the declared size, trajectories
// with >= 2 points starting near their box. Throws InputError.
void validate_scene(const SceneDescriptor& scene, const std::string& source_name);

}  // namespace pathcast

#endif  // PATHCAST_SCENE_HPP_
