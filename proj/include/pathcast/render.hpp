#ifndef PATHCAST_RENDER_HPP_
#define PATHCAST_RENDER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathcast/planner.hpp"

namespace pathcast {

struct RenderOptions {
    int cell_size = 16;                 // pixels per grid cell
    std::string background = "reward";  // "reward" or "cost"
    bool show_ground_truth = true;
    std::string provenance;  // embedded as a comment, no timestamps
};

// Static figure of a prediction: background shading from the reward or
// cost map, obstacle cells, the ground truth, the top-1 path in red with
// the remaining predictions in black, and an orientation arrow at the
// start. Output is deterministic (fixed float formatting, no timestamps).
std::string render_svg(const PredictOutcome& outcome,
                       const std::optional<ScalarField>& grid_obstacles,
                       const std::optional<PathSeq>& ground_truth,
                       const RenderOptions& options);

// Binary PPM (P6) raster of the same figure; the provenance comment rides
// in the header.
std::vector<std::uint8_t> render_ppm(const PredictOutcome& outcome,
                                     const std::optional<ScalarField>& grid_obstacles,
                                     const std::optional<PathSeq>& ground_truth,
                                     const RenderOptions& options);

}  // namespace pathcast

#endif  // PATHCAST_RENDER_HPP_
