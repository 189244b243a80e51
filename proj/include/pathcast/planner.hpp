#ifndef PATHCAST_PLANNER_HPP_
#define PATHCAST_PLANNER_HPP_

#include <optional>
#include <vector>

#include "pathcast/providers.hpp"
#include "pathcast/scalar_field.hpp"
#include "pathcast/scene.hpp"

namespace pathcast {

struct PlannerConfig {
    // Obstacle tolerance of the reward->cost sigmoid. Negative values map
    // high reward to low cost, which is what the planner wants; the sign is
    // user-overridable.
    double alpha = -10.0;
    double gamma = 0.5;    // sigmoid midpoint, in (0, 1)
    double epsilon = 5.0;  // orientation penalty weight, >= 0

    std::optional<int> probe_distance;  // override for d, >= 1
    std::optional<int> window;          // sliding window, default max(d, 8)
    std::optional<int> stride;          // default max(1, window / 2)
    int downsample = 1;                 // pixels per grid cell, >= 1

    // Connectivity is fixed to the 8-neighborhood.
    static constexpr int kNeighborCount = 8;

    void validate() const;  // throws UsageError
};

// Eq-style sigmoid conversion applied cell-wise:
//   cost(s) = 1 / (1 + exp(-alpha * (reward(s) - gamma)))
// Output values lie in the open interval (0, 1).
ScalarField to_cost_map(const ScalarField& reward, const PlannerConfig& cfg);

// Directed grid graph over a cost map. Edges join 8-adjacent cells; the
// weight of any edge entering cell s is the cell's cost plus, on the ring
// of cells at L1 distance d or d+1 from the start, epsilon times the
// angular difference between the cell's bearing from the start and the
// estimated heading.
class PlanGraph {
public:
    PlanGraph(const ScalarField& cost, Position start, Angle theta_esti, int d,
              const PlannerConfig& cfg);

    int width() const { return entry_weight_.width(); }
    int height() const { return entry_weight_.height(); }
    Position start() const { return start_; }
    int probe_distance() const { return probe_distance_; }

    double entry_weight(Position p) const { return entry_weight_.at(p); }
    bool is_ring_cell(Position p) const;
    bool is_boundary_cell(Position p) const;

    int out_degree(Position p) const;
    // In-grid 8-neighbors, fixed scan order (N, NE, E, SE, S, SW, W, NW).
    std::vector<Position> neighbors(Position p) const;
    // All border cells, row-major; their count is 2*(W+H) - 4.
    std::vector<Position> boundary_cells() const;

private:
    ScalarField entry_weight_;
    Position start_;
    int probe_distance_;
};

PlanGraph build_graph(const ScalarField& cost, Position s_ini, Angle theta_esti,
                      int d, const PlannerConfig& cfg);

// Shortest boundary paths in ascending length order; lengths tie-break on
// the terminal cell, (row, column) ascending.
struct PredictionSet {
    std::vector<PathSeq> paths;
    std::vector<double> lengths;

    std::size_t size() const { return paths.size(); }
    bool empty() const { return paths.empty(); }
};

// Single-source Dijkstra from the start node; one path per boundary cell.
PredictionSet shortest_paths_to_boundary(const PlanGraph& graph);

// Original-objective decomposition of a path's cost: the cost-map sum over
// all cells including the first, the angular difference between the path's
// initial direction (probed at L1 distance d) and the estimated heading,
// and their epsilon-weighted combination.
struct PathCostAudit {
    double spatial = 0.0;
    double orientation = 0.0;
    double total = 0.0;
};

PathCostAudit path_cost_audit(const PathSeq& path, const ScalarField& cost,
                              Angle theta_esti, int d, const PlannerConfig& cfg);

// End-to-end prediction for one object: assemble the reward map, estimate
// the heading, convert to costs, build the graph and extract the sorted
// boundary paths. Intermediate products are kept for rendering and audits.
struct PredictOutcome {
    PredictionSet predictions;  // first min(top_n, m) paths
    ScalarField reward_map;
    ScalarField cost_map;
    Angle theta_esti;
    int probe_distance = 0;
    Position start;
    int window = 0;  // resolved sliding-window parameters
    int stride = 0;
};

PredictOutcome predict(const SceneDescriptor& scene, const ObjectRecord& object,
                       const RewardProvider& reward_provider,
                       const OrientationProvider& orientation_provider,
                       const PlannerConfig& cfg, int top_n);

}  // namespace pathcast

#endif  // PATHCAST_PLANNER_HPP_
