#ifndef PATHCAST_BASELINE_HPP_
#define PATHCAST_BASELINE_HPP_

#include "pathcast/providers.hpp"
#include "pathcast/scene.hpp"

namespace pathcast {

// Reference comparator: the 8-connected rasterized ray from the object's
// start cell along the estimated heading, ending at the first boundary
// cell of the planning grid.
PathSeq straight_line_baseline(const SceneDescriptor& scene,
                               const ObjectRecord& object,
                               const OrientationProvider& orientation_provider,
                               int downsample = 1);

}  // namespace pathcast

#endif  // PATHCAST_BASELINE_HPP_
