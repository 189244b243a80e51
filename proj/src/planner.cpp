#include "pathcast/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "pathcast/errors.hpp"
#include "pathcast/reward_map.hpp"

namespace pathcast {

namespace {

// Fixed neighbor scan order: N, NE, E, SE, S, SW, W, NW (y down).
constexpr int kDx[8] = {0, 1, 1, 1, 0, -1, -1, -1};
constexpr int kDy[8] = {-1, -1, 0, 1, 1, 1, 0, -1};

}  // namespace

void PlannerConfig::validate() const {
    if (!std::isfinite(alpha)) throw UsageError("alpha must be finite");
    if (!(gamma > 0.0 && gamma < 1.0)) throw UsageError("gamma must lie in (0, 1)");
    if (!(epsilon >= 0.0)) throw UsageError("epsilon must be >= 0");
    if (probe_distance && *probe_distance < 1) {
        throw UsageError("probe distance must be >= 1");
    }
    if (window && *window < 1) throw UsageError("window must be >= 1");
    if (stride && *stride < 1) throw UsageError("stride must be >= 1");
    if (window && stride && *stride > *window) {
        throw UsageError("stride must not exceed window");
    }
    if (downsample < 1) throw UsageError("downsample factor must be >= 1");
}

ScalarField to_cost_map(const ScalarField& reward, const PlannerConfig& cfg) {
    ScalarField cost = reward;
    for (double& v : cost.values()) {
        v = 1.0 / (1.0 + std::exp(-cfg.alpha * (v - cfg.gamma)));
    }
    return cost;
}

PlanGraph::PlanGraph(const ScalarField& cost, Position start, Angle theta_esti,
                     int d, const PlannerConfig& cfg)
    : entry_weight_(cost), start_(start), probe_distance_(d) {
    if (d < 1) {
        throw PlanningError("graph", "probe distance must be >= 1");
    }
    const int w = cost.width();
    const int h = cost.height();
    if (w < 3 || h < 3 || start.x <= 0 || start.x >= w - 1 || start.y <= 0 ||
        start.y >= h - 1) {
        throw PlanningError("graph", "start cell (" + std::to_string(start.x) +
                                         ", " + std::to_string(start.y) +
                                         ") lies on the grid boundary");
    }
    // Bake the orientation penalty into the ring cells' entry weights.
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const Position p{x, y};
            const int dist = l1_distance(p, start_);
            if (dist == d || dist == d + 1) {
                const Angle bearing = direction_between(start_, p);
                entry_weight_.at(p) +=
                    cfg.epsilon * angular_difference(bearing, theta_esti);
            }
        }
    }
}

bool PlanGraph::is_ring_cell(Position p) const {
    const int dist = l1_distance(p, start_);
    return dist == probe_distance_ || dist == probe_distance_ + 1;
}

bool PlanGraph::is_boundary_cell(Position p) const {
    return p.x == 0 || p.y == 0 || p.x == width() - 1 || p.y == height() - 1;
}

int PlanGraph::out_degree(Position p) const {
    int degree = 0;
    for (int k = 0; k < 8; ++k) {
        if (entry_weight_.in_bounds(p.x + kDx[k], p.y + kDy[k])) ++degree;
    }
    return degree;
}

std::vector<Position> PlanGraph::neighbors(Position p) const {
    std::vector<Position> out;
    out.reserve(8);
    for (int k = 0; k < 8; ++k) {
        const int nx = p.x + kDx[k];
        const int ny = p.y + kDy[k];
        if (entry_weight_.in_bounds(nx, ny)) out.push_back(Position{nx, ny});
    }
    return out;
}

std::vector<Position> PlanGraph::boundary_cells() const {
    std::vector<Position> out;
    for (int y = 0; y < height(); ++y) {
        for (int x = 0; x < width(); ++x) {
            if (is_boundary_cell(Position{x, y})) out.push_back(Position{x, y});
        }
    }
    return out;
}

PlanGraph build_graph(const ScalarField& cost, Position s_ini, Angle theta_esti,
                      int d, const PlannerConfig& cfg) {
    return PlanGraph(cost, s_ini, theta_esti, d, cfg);
}

PredictionSet shortest_paths_to_boundary(const PlanGraph& graph) {
    const int w = graph.width();
    const int h = graph.height();
    const auto idx = [w](Position p) {
        return static_cast<std::size_t>(p.y) * w + p.x;
    };
    const std::size_t n = static_cast<std::size_t>(w) * h;
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    std::vector<int> parent(n, -1);

    using Entry = std::pair<double, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;
    dist[idx(graph.start())] = 0.0;
    queue.emplace(0.0, idx(graph.start()));

    while (!queue.empty()) {
        const auto [du, u] = queue.top();
        queue.pop();
        if (du > dist[u]) continue;
        const Position pu{static_cast<int>(u % w), static_cast<int>(u / w)};
        for (const Position pv : graph.neighbors(pu)) {
            const std::size_t v = idx(pv);
            const double nd = du + graph.entry_weight(pv);
            if (nd < dist[v]) {
                dist[v] = nd;
                parent[v] = static_cast<int>(u);
                queue.emplace(nd, v);
            }
        }
    }

    struct Terminal {
        double length;
        Position cell;
    };
    std::vector<Terminal> terminals;
    for (const Position t : graph.boundary_cells()) {
        terminals.push_back(Terminal{dist[idx(t)], t});
    }
    std::sort(terminals.begin(), terminals.end(),
              [](const Terminal& a, const Terminal& b) {
                  if (a.length != b.length) return a.length < b.length;
                  return row_major_less(a.cell, b.cell);
              });

    PredictionSet set;
    set.paths.reserve(terminals.size());
    set.lengths.reserve(terminals.size());
    for (const Terminal& t : terminals) {
        PathSeq path;
        std::size_t cursor = idx(t.cell);
        while (true) {
            path.push_back(Position{static_cast<int>(cursor % w),
                                    static_cast<int>(cursor / w)});
            if (parent[cursor] < 0) break;
            cursor = static_cast<std::size_t>(parent[cursor]);
        }
        std::reverse(path.begin(), path.end());
        set.paths.push_back(std::move(path));
        set.lengths.push_back(t.length);
    }
    return set;
}

PathCostAudit path_cost_audit(const PathSeq& path, const ScalarField& cost,
                              Angle theta_esti, int d, const PlannerConfig& cfg) {
    if (path.size() < 2) {
        throw PlanningError("audit",
                            "path has fewer than 2 cells; its initial direction is undefined");
    }
    if (d < 1) {
        throw PlanningError("audit", "probe distance must be >= 1");
    }
    PathCostAudit audit;
    for (const Position& p : path) {
        if (!cost.in_bounds(p)) {
            throw PlanningError("audit", "path cell outside the cost map");
        }
        audit.spatial += cost.at(p);
    }
    // theta_P: bearing from the start to the first cell at L1 distance >= d,
    // falling back to the last cell.
    const Position start = path.front();
    Position probe = path.back();
    for (std::size_t i = 1; i < path.size(); ++i) {
        if (l1_distance(path[i], start) >= d) {
            probe = path[i];
            break;
        }
    }
    const Angle theta_p = direction_between(start, probe);
    audit.orientation = angular_difference(theta_p, theta_esti);
    audit.total = audit.spatial + cfg.epsilon * audit.orientation;
    return audit;
}

PredictOutcome predict(const SceneDescriptor& scene, const ObjectRecord& object,
                       const RewardProvider& reward_provider,
                       const OrientationProvider& orientation_provider,
                       const PlannerConfig& cfg, int top_n) {
    cfg.validate();
    if (top_n < 1) throw UsageError("top_n must be >= 1");

    PredictOutcome out;
    const int ds = cfg.downsample;
    const GridDims dims = planning_grid_dims(scene, ds);

    Position start = object.box.center_cell(ds);
    start.x = std::clamp(start.x, 0, dims.width - 1);
    start.y = std::clamp(start.y, 0, dims.height - 1);
    out.start = start;

    const int d = cfg.probe_distance ? *cfg.probe_distance
                                     : diagonal_distance(object.box, ds);
    out.probe_distance = d;
    out.window = cfg.window ? *cfg.window : std::max(d, 8);
    out.stride = cfg.stride ? *cfg.stride : std::max(1, out.window / 2);
    if (out.stride > out.window) {
        throw UsageError("stride must not exceed window");
    }

    out.reward_map = assemble_reward_map(scene, object, reward_provider,
                                         out.window, out.stride, ds);

    try {
        out.theta_esti = orientation_provider.estimate(object);
    } catch (const std::exception& e) {
        throw PlanningError("orientation", e.what());
    }

    out.cost_map = to_cost_map(out.reward_map, cfg);
    const PlanGraph graph = build_graph(out.cost_map, start, out.theta_esti, d, cfg);
    PredictionSet full = shortest_paths_to_boundary(graph);

    const std::size_t keep = std::min<std::size_t>(top_n, full.size());
    full.paths.resize(keep);
    full.lengths.resize(keep);
    out.predictions = std::move(full);
    return out;
}

}  // namespace pathcast
