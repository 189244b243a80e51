#include "pathcast/synth.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "pathcast/errors.hpp"
#include "pathcast/raster_io.hpp"

namespace pathcast {

namespace {

// Draws through the raw mt19937_64 stream only; the standard pins that
// generator down exactly, so scenes are reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    int below(int n) {  // uniform-ish in [0, n)
        return static_cast<int>(next() % static_cast<std::uint64_t>(n));
    }

    int range(int lo, int hi) {  // inclusive
        return lo + below(hi - lo + 1);
    }

private:
    std::mt19937_64 engine_;
};

struct Mask {
    int width = 0, height = 0;
    std::vector<std::uint8_t> cells;

    Mask(int w, int h) : width(w), height(h), cells(static_cast<std::size_t>(w) * h, 0) {}
    std::uint8_t& at(int x, int y) { return cells[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t at(int x, int y) const { return cells[static_cast<std::size_t>(y) * width + x]; }
    bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
};

constexpr int kPlacementAttempts = 200;

void paint_roads(Mask& road, const SynthSpec& spec, Rng& rng) {
    for (int i = 0; i < spec.road_count; ++i) {
        const int thickness = rng.range(3, 5);
        // Alternating orientations keep the network connected: every
        // horizontal strip crosses every vertical one.
        const bool horizontal = (i % 2) == 0;
        if (horizontal) {
            const int row = rng.range(4, spec.height - 4 - thickness);
            for (int y = row; y < row + thickness; ++y)
                for (int x = 0; x < spec.width; ++x) road.at(x, y) = 1;
        } else {
            const int col = rng.range(4, spec.width - 4 - thickness);
            for (int x = col; x < col + thickness; ++x)
                for (int y = 0; y < spec.height; ++y) road.at(x, y) = 1;
        }
    }
}

void place_rects(Mask& obstacle, const Mask& reserved, const SynthSpec& spec, Rng& rng) {
    const int max_side = std::max(4, std::min(spec.width, spec.height) / 6);
    for (int i = 0; i < spec.rect_count; ++i) {
        bool placed = false;
        for (int attempt = 0; attempt < kPlacementAttempts && !placed; ++attempt) {
            const int w = rng.range(3, max_side);
            const int h = rng.range(3, max_side);
            const int x0 = rng.below(spec.width - w + 1);
            const int y0 = rng.below(spec.height - h + 1);
            bool clear = true;
            for (int y = y0; y < y0 + h && clear; ++y)
                for (int x = x0; x < x0 + w && clear; ++x)
                    if (reserved.at(x, y) || obstacle.at(x, y)) clear = false;
            if (!clear) continue;
            for (int y = y0; y < y0 + h; ++y)
                for (int x = x0; x < x0 + w; ++x) obstacle.at(x, y) = 1;
            placed = true;
        }
        if (!placed) {
            throw InputError("unsatisfiable synthetic spec: no room for rectangle obstacles off the roads");
        }
    }
}

void place_blobs(Mask& obstacle, const Mask& reserved, const SynthSpec& spec, Rng& rng) {
    for (int i = 0; i < spec.blob_count; ++i) {
        int sx = -1, sy = -1;
        for (int attempt = 0; attempt < kPlacementAttempts; ++attempt) {
            const int x = rng.below(spec.width);
            const int y = rng.below(spec.height);
            if (!reserved.at(x, y) && !obstacle.at(x, y)) {
                sx = x;
                sy = y;
                break;
            }
        }
        if (sx < 0) {
            throw InputError("unsatisfiable synthetic spec: no terrain left for blob obstacles");
        }
        std::vector<Position> members{{sx, sy}};
        obstacle.at(sx, sy) = 1;
        const int target = rng.range(8, 24);
        constexpr int dx[4] = {1, -1, 0, 0};
        constexpr int dy[4] = {0, 0, 1, -1};
        for (int grown = 1; grown < target; ++grown) {
            // Grow from a random member; dead draws just stall the blob.
            const Position base = members[rng.below(static_cast<int>(members.size()))];
            const int k = rng.below(4);
            const int nx = base.x + dx[k];
            const int ny = base.y + dy[k];
            if (!obstacle.in_bounds(nx, ny) || reserved.at(nx, ny) || obstacle.at(nx, ny)) {
                continue;
            }
            obstacle.at(nx, ny) = 1;
            members.push_back(Position{nx, ny});
        }
    }
}

// 2x2 obstacles on the roads themselves (parked vehicles). Placement keeps
// a clear ring around each blocker, so free space stays connected and the
// walker can always squeeze past. Density is best-effort.
void place_blockers(Mask& obstacle, const Mask& road, const Mask& wall_channel,
                    const SynthSpec& spec, Rng& rng) {
    for (int i = 0; i < spec.blocker_count; ++i) {
        for (int attempt = 0; attempt < kPlacementAttempts; ++attempt) {
            const int x = rng.range(2, spec.width - 4);
            const int y = rng.range(2, spec.height - 4);
            if (!road.at(x, y)) continue;
            bool clear = true;
            for (int yy = y - 2; yy <= y + 3 && clear; ++yy)
                for (int xx = x - 2; xx <= x + 3 && clear; ++xx)
                    if (obstacle.at(xx, yy) || wall_channel.at(xx, yy)) clear = false;
            if (!clear) continue;
            obstacle.at(x, y) = obstacle.at(x + 1, y) = 1;
            obstacle.at(x, y + 1) = obstacle.at(x + 1, y + 1) = 1;
            break;
        }
    }
}

void paint_wall(Mask& obstacle, const WallSpec& wall, const SynthSpec& spec) {
    for (int y = 0; y < spec.height; ++y) {
        if (y >= wall.gap_row && y < wall.gap_row + wall.gap_height) continue;
        obstacle.at(wall.column, y) = 1;
    }
}

// Weighted Dijkstra over free cells from one start: roads are cheap,
// terrain is expensive, obstacles are impassable. A per-cell jitter drawn
// once per scene gives paths a seeded wiggle without breaking determinism.
struct WalkerField {
    std::vector<long long> dist;
    std::vector<int> parent;
};

WalkerField weighted_field(const Mask& obstacle, const Mask& road, Position start,
                           const std::vector<int>& jitter) {
    const int w = obstacle.width;
    const std::size_t n = static_cast<std::size_t>(w) * obstacle.height;
    WalkerField field;
    field.dist.assign(n, std::numeric_limits<long long>::max());
    field.parent.assign(n, -1);
    const auto idx = [w](Position p) { return static_cast<std::size_t>(p.y) * w + p.x; };
    using Entry = std::pair<long long, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;
    field.dist[idx(start)] = 0;
    queue.emplace(0, idx(start));
    constexpr int dx[8] = {0, 1, 1, 1, 0, -1, -1, -1};
    constexpr int dy[8] = {-1, -1, 0, 1, 1, 1, 0, -1};
    while (!queue.empty()) {
        const auto [du, u] = queue.top();
        queue.pop();
        if (du > field.dist[u]) continue;
        const Position pu{static_cast<int>(u % w), static_cast<int>(u / w)};
        for (int k = 0; k < 8; ++k) {
            const int nx = pu.x + dx[k];
            const int ny = pu.y + dy[k];
            if (!obstacle.in_bounds(nx, ny) || obstacle.at(nx, ny)) continue;
            const std::size_t v = idx(Position{nx, ny});
            const long long step = (road.at(nx, ny) ? 2 : 9) + jitter[v];
            if (field.dist[u] + step < field.dist[v]) {
                field.dist[v] = field.dist[u] + step;
                field.parent[v] = static_cast<int>(u);
                queue.emplace(field.dist[v], v);
            }
        }
    }
    return field;
}

PathSeq extract_walk(const WalkerField& field, int width, Position goal) {
    PathSeq path;
    std::size_t cursor = static_cast<std::size_t>(goal.y) * width + goal.x;
    while (true) {
        path.push_back(Position{static_cast<int>(cursor % width),
                                static_cast<int>(cursor / width)});
        if (field.parent[cursor] < 0) break;
        cursor = static_cast<std::size_t>(field.parent[cursor]);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

void SynthSpec::validate() const {
    if (width < 24 || height < 24) {
        throw UsageError("synthetic scenes need at least a 24x24 grid");
    }
    if (road_count < 1) throw UsageError("road count must be >= 1");
    if (rect_count < 0 || blob_count < 0 || blocker_count < 0) {
        throw UsageError("obstacle counts must be >= 0");
    }
    if (agent_count < 1) throw UsageError("agent count must be >= 1");
    if (!(terrain_reward >= 0.0 && terrain_reward <= 1.0)) {
        throw UsageError("terrain reward must lie in [0, 1]");
    }
    if (wall) {
        if (wall->column < 3 || wall->column >= width - 3) {
            throw UsageError("wall column must be well inside the grid");
        }
        if (wall->gap_height < 1 || wall->gap_row < 0 ||
            wall->gap_row + wall->gap_height > height) {
            throw UsageError("wall gap must lie inside the grid");
        }
    }
}

SceneDescriptor generate_synthetic_scene(std::uint64_t seed, const SynthSpec& spec) {
    spec.validate();
    Rng rng(seed);

    Mask road(spec.width, spec.height);
    Mask obstacle(spec.width, spec.height);
    paint_roads(road, spec, rng);
    // Large obstacles stay off the roads; everything stays out of the
    // wall's channel so the gap remains passable.
    Mask wall_channel(spec.width, spec.height);
    if (spec.wall) {
        for (int y = 0; y < spec.height; ++y) {
            for (int x = spec.wall->column - 1; x <= spec.wall->column + 1; ++x) {
                wall_channel.at(x, y) = 1;
            }
        }
    }
    Mask reserved = road;
    if (spec.wall) {
        for (std::size_t i = 0; i < reserved.cells.size(); ++i) {
            reserved.cells[i] |= wall_channel.cells[i];
        }
    }
    place_rects(obstacle, reserved, spec, rng);
    place_blobs(obstacle, reserved, spec, rng);
    place_blockers(obstacle, road, wall_channel, spec, rng);
    if (spec.wall) paint_wall(obstacle, *spec.wall, spec);

    std::vector<int> jitter(static_cast<std::size_t>(spec.width) * spec.height);
    for (int& j : jitter) j = rng.below(2);

    SceneDescriptor scene;
    char id[32];
    std::snprintf(id, sizeof id, "synth_%016llx",
                  static_cast<unsigned long long>(seed));
    scene.scene_id = id;
    scene.width = spec.width;
    scene.height = spec.height;

    ScalarField obstacle_field(spec.width, spec.height);
    ScalarField reward_field(spec.width, spec.height);
    for (int y = 0; y < spec.height; ++y) {
        for (int x = 0; x < spec.width; ++x) {
            const bool blocked = obstacle.at(x, y) != 0;
            obstacle_field.at(x, y) = blocked ? 1.0 : 0.0;
            reward_field.at(x, y) =
                blocked ? 0.0 : (road.at(x, y) ? 1.0 : spec.terrain_reward);
        }
    }

    // Border road cells are the walker goals; strips span the grid, so the
    // set is never empty.
    std::vector<Position> border_road;
    for (int y = 0; y < spec.height; ++y) {
        for (int x = 0; x < spec.width; ++x) {
            const bool border = x == 0 || y == 0 || x == spec.width - 1 || y == spec.height - 1;
            if (border && road.at(x, y) && !obstacle.at(x, y)) {
                border_road.push_back(Position{x, y});
            }
        }
    }

    constexpr int kBoxSide = 4;  // even, so the box center lands on the start cell
    const int probe = diagonal_distance(BoundingBox{0, 0, kBoxSide, kBoxSide}, 1);
    const int min_span = std::max(2 * probe + 2, std::min(spec.width, spec.height) / 3);

    for (int agent = 0; agent < spec.agent_count; ++agent) {
        Position start{-1, -1};
        for (int attempt = 0; attempt < kPlacementAttempts; ++attempt) {
            const int x = rng.range(3, spec.width - 4);
            const int y = rng.range(3, spec.height - 4);
            if (road.at(x, y) && !obstacle.at(x, y)) {
                start = Position{x, y};
                break;
            }
        }
        if (start.x < 0) {
            throw InputError("unsatisfiable synthetic spec: no free road cell for an agent start");
        }

        // The walker leaves through the most convenient far exit: one
        // weighted distance field from the start, then the cheapest border
        // road cell beyond the span minimum. A wall forces the exit onto
        // the other side, which threads the gap. The per-cell jitter keeps
        // exit choices varied across seeds.
        const WalkerField field = weighted_field(obstacle, road, start, jitter);
        const auto dist_at = [&](Position p) {
            return field.dist[static_cast<std::size_t>(p.y) * spec.width + p.x];
        };
        Position goal{-1, -1};
        for (int span : {min_span, 2 * probe + 2}) {
            long long best = std::numeric_limits<long long>::max();
            for (const Position& candidate : border_road) {
                if (chebyshev_distance(start, candidate) < span) continue;
                if (spec.wall) {
                    const bool start_left = start.x < spec.wall->column;
                    const bool candidate_left = candidate.x < spec.wall->column;
                    if (start_left == candidate_left) continue;
                }
                const long long d = dist_at(candidate);
                if (d < best || (d == best && row_major_less(candidate, goal))) {
                    best = d;
                    goal = candidate;
                }
            }
            if (goal.x >= 0) break;
        }
        if (goal.x < 0) {
            throw InputError("unsatisfiable synthetic spec: walker found no goal reachable from (" +
                             std::to_string(start.x) + ", " + std::to_string(start.y) + ")");
        }
        PathSeq trajectory = extract_walk(field, spec.width, goal);

        ObjectRecord record;
        record.box = BoundingBox{start.x - kBoxSide / 2, start.y - kBoxSide / 2,
                                 kBoxSide, kBoxSide};
        record.trajectory = std::move(trajectory);
        scene.objects.push_back(std::move(record));
    }

    scene.obstacle_field = std::move(obstacle_field);
    scene.reward_field = std::move(reward_field);
    validate_scene(scene, scene.scene_id);
    return scene;
}

void write_scene_directory(const SceneDescriptor& scene,
                           const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw InputError(dir.string() + ": cannot create output directory");
    }
    if (!scene.reward_field || !scene.obstacle_field) {
        throw InputError("scene '" + scene.scene_id + "' has no embedded rasters to write");
    }
    SceneDescriptor on_disk = scene;
    on_disk.reward_map_ref = "reward.csv";
    on_disk.obstacle_map_ref = "obstacle.pgm";
    write_field_csv(*scene.reward_field, dir / "reward.csv");
    write_pgm(*scene.obstacle_field, dir / "obstacle.pgm");
    for (std::size_t i = 0; i < on_disk.objects.size(); ++i) {
        ObjectRecord& record = on_disk.objects[i];
        if (!record.trajectory) continue;
        const std::string name = "traj_" + std::to_string(i) + ".csv";
        write_trajectory_csv(*record.trajectory, dir / name);
        record.trajectory_ref = name;
    }
    std::ofstream out(dir / "scene.json", std::ios::binary);
    if (!out) {
        throw InputError((dir / "scene.json").string() + ": cannot open for writing");
    }
    out << scene_to_json(on_disk);
    if (!out) {
        throw InputError((dir / "scene.json").string() + ": write failed");
    }
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base ^ (index * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace pathcast
