#include "pathcast/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "pathcast/errors.hpp"

namespace pathcast {

namespace {

struct Rgb {
    std::uint8_t r, g, b;
};

constexpr Rgb kObstacle{40, 40, 40};
constexpr Rgb kGroundTruth{46, 110, 220};
constexpr Rgb kTopPath{214, 39, 40};
constexpr Rgb kOtherPath{0, 0, 0};
constexpr Rgb kArrow{34, 150, 60};

// Background shade for a map value: high reward (or low cost) renders
// light.
Rgb shade(double value, bool invert) {
    const double v = invert ? 1.0 - value : value;
    const int level = 64 + static_cast<int>(std::lround(v * 184.0));
    return Rgb{static_cast<std::uint8_t>(level), static_cast<std::uint8_t>(level),
               static_cast<std::uint8_t>(level)};
}

const ScalarField& background_field(const PredictOutcome& outcome,
                                    const RenderOptions& options) {
    if (options.background == "reward") return outcome.reward_map;
    if (options.background == "cost") return outcome.cost_map;
    throw UsageError("unknown render background '" + options.background + "'");
}

void validate_against_grid(const PredictOutcome& outcome,
                           const std::optional<ScalarField>& obstacles,
                           const std::optional<PathSeq>& gt) {
    const ScalarField& grid = outcome.reward_map;
    if (obstacles && (obstacles->width() != grid.width() ||
                      obstacles->height() != grid.height())) {
        throw InputError("obstacle map does not match the prediction grid");
    }
    for (const PathSeq& path : outcome.predictions.paths) {
        for (const Position& p : path) {
            if (!grid.in_bounds(p)) {
                throw InputError("prediction cell outside the scene grid; scene and prediction do not match");
            }
        }
    }
    if (gt) {
        for (const Position& p : *gt) {
            if (!grid.in_bounds(p)) {
                throw InputError("ground-truth cell outside the scene grid");
            }
        }
    }
}

PathSeq arrow_cells(const PredictOutcome& outcome, int width, int height) {
    PathSeq cells;
    const double theta = outcome.theta_esti.radians();
    const int reach = outcome.probe_distance + 1;
    for (int t = 0; t <= reach; ++t) {
        const int x = outcome.start.x + static_cast<int>(std::lround(t * std::cos(theta)));
        const int y = outcome.start.y + static_cast<int>(std::lround(t * std::sin(theta)));
        if (x < 0 || y < 0 || x >= width || y >= height) break;
        const Position p{x, y};
        if (cells.empty() || !(cells.back() == p)) cells.push_back(p);
    }
    return cells;
}

std::string rgb_attr(Rgb c) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "rgb(%d,%d,%d)", c.r, c.g, c.b);
    return buf;
}

void svg_polyline(std::ostringstream& out, const PathSeq& path, Rgb color,
                  double stroke_width) {
    out << "<polyline fill=\"none\" stroke=\"" << rgb_attr(color)
        << "\" stroke-width=\"" << stroke_width << "\" points=\"";
    for (std::size_t i = 0; i < path.size(); ++i) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%s%.1f,%.1f", i ? " " : "",
                      path[i].x + 0.5, path[i].y + 0.5);
        out << buf;
    }
    out << "\"/>\n";
}

}  // namespace

std::string render_svg(const PredictOutcome& outcome,
                       const std::optional<ScalarField>& grid_obstacles,
                       const std::optional<PathSeq>& ground_truth,
                       const RenderOptions& options) {
    if (options.cell_size < 1) throw UsageError("cell size must be >= 1");
    validate_against_grid(outcome, grid_obstacles, ground_truth);
    const ScalarField& bg = background_field(outcome, options);
    const bool invert = options.background == "cost";
    const int w = bg.width();
    const int h = bg.height();

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * options.cell_size
        << "\" height=\"" << h * options.cell_size << "\" viewBox=\"0 0 " << w << " "
        << h << "\">\n";
    if (!options.provenance.empty()) {
        out << "<!-- " << options.provenance << " -->\n";
    }

    // Background shading, run-length merged per row.
    for (int y = 0; y < h; ++y) {
        int x = 0;
        while (x < w) {
            int run = 1;
            const double value = bg.at(x, y);
            while (x + run < w && bg.at(x + run, y) == value) ++run;
            out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << run
                << "\" height=\"1\" fill=\"" << rgb_attr(shade(value, invert))
                << "\"/>\n";
            x += run;
        }
    }
    if (grid_obstacles) {
        for (int y = 0; y < h; ++y) {
            int x = 0;
            while (x < w) {
                if (grid_obstacles->at(x, y) == 0.0) {
                    ++x;
                    continue;
                }
                int run = 1;
                while (x + run < w && grid_obstacles->at(x + run, y) != 0.0) ++run;
                out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << run
                    << "\" height=\"1\" fill=\"" << rgb_attr(kObstacle) << "\"/>\n";
                x += run;
            }
        }
    }

    if (ground_truth && options.show_ground_truth) {
        svg_polyline(out, *ground_truth, kGroundTruth, 0.6);
    }
    const auto& paths = outcome.predictions.paths;
    for (std::size_t k = paths.size(); k-- > 1;) {
        svg_polyline(out, paths[k], kOtherPath, 0.25);
    }
    if (!paths.empty()) {
        svg_polyline(out, paths[0], kTopPath, 0.5);
    }
    svg_polyline(out, arrow_cells(outcome, w, h), kArrow, 0.4);
    out << "</svg>\n";
    return std::move(out).str();
}

std::vector<std::uint8_t> render_ppm(const PredictOutcome& outcome,
                                     const std::optional<ScalarField>& grid_obstacles,
                                     const std::optional<PathSeq>& ground_truth,
                                     const RenderOptions& options) {
    if (options.cell_size < 1) throw UsageError("cell size must be >= 1");
    validate_against_grid(outcome, grid_obstacles, ground_truth);
    const ScalarField& bg = background_field(outcome, options);
    const bool invert = options.background == "cost";
    const int w = bg.width();
    const int h = bg.height();
    const int cs = options.cell_size;
    const int pw = w * cs;
    const int ph = h * cs;

    std::vector<Rgb> pixels(static_cast<std::size_t>(pw) * ph);
    const auto fill_cell = [&](Position p, Rgb color) {
        for (int dy = 0; dy < cs; ++dy) {
            Rgb* row = pixels.data() + static_cast<std::size_t>(p.y * cs + dy) * pw + p.x * cs;
            for (int dx = 0; dx < cs; ++dx) row[dx] = color;
        }
    };

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            fill_cell(Position{x, y}, shade(bg.at(x, y), invert));
        }
    }
    if (grid_obstacles) {
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x)
                if (grid_obstacles->at(x, y) != 0.0) fill_cell(Position{x, y}, kObstacle);
    }
    if (ground_truth && options.show_ground_truth) {
        for (const Position& p : *ground_truth) fill_cell(p, kGroundTruth);
    }
    const auto& paths = outcome.predictions.paths;
    for (std::size_t k = paths.size(); k-- > 1;) {
        for (const Position& p : paths[k]) fill_cell(p, kOtherPath);
    }
    if (!paths.empty()) {
        for (const Position& p : paths[0]) fill_cell(p, kTopPath);
    }
    for (const Position& p : arrow_cells(outcome, w, h)) fill_cell(p, kArrow);

    std::string header = "P6\n";
    if (!options.provenance.empty()) {
        header += "# " + options.provenance + "\n";
    }
    header += std::to_string(pw) + " " + std::to_string(ph) + "\n255\n";
    std::vector<std::uint8_t> bytes;
    bytes.reserve(header.size() + pixels.size() * 3);
    bytes.insert(bytes.end(), header.begin(), header.end());
    for (const Rgb& px : pixels) {
        bytes.push_back(px.r);
        bytes.push_back(px.g);
        bytes.push_back(px.b);
    }
    return bytes;
}

}  // namespace pathcast
