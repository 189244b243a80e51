#include "pathcast/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "pathcast/errors.hpp"
#include "pathcast/reward_map.hpp"

namespace pathcast {

PathSeq straight_line_baseline(const SceneDescriptor& scene,
                               const ObjectRecord& object,
                               const OrientationProvider& orientation_provider,
                               int downsample) {
    const GridDims dims = planning_grid_dims(scene, downsample);
    Position start = object.box.center_cell(downsample);
    start.x = std::clamp(start.x, 0, dims.width - 1);
    start.y = std::clamp(start.y, 0, dims.height - 1);
    const Angle theta = orientation_provider.estimate(object);

    // Bresenham march toward a far virtual endpoint along theta; the ray is
    // 8-connected by construction and must cross the border before the
    // endpoint.
    const double reach = 4.0 * (dims.width + dims.height);
    const long long ex = start.x + std::llround(reach * std::cos(theta.radians()));
    const long long ey = start.y + std::llround(reach * std::sin(theta.radians()));
    const long long dx = std::llabs(ex - start.x);
    const long long dy = -std::llabs(ey - start.y);
    const int sx = ex >= start.x ? 1 : -1;
    const int sy = ey >= start.y ? 1 : -1;
    long long err = dx + dy;

    PathSeq path;
    Position p = start;
    while (true) {
        path.push_back(p);
        if (p.x == 0 || p.y == 0 || p.x == dims.width - 1 || p.y == dims.height - 1) {
            break;
        }
        const long long e2 = 2 * err;
        if (e2 >= dy) {
            err += dy;
            p.x += sx;
        }
        if (e2 <= dx) {
            err += dx;
            p.y += sy;
        }
    }
    return path;
}

}  // namespace pathcast
