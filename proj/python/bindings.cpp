#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <utility>
#include <vector>

#include "pathcast/baseline.hpp"
#include "pathcast/errors.hpp"
#include "pathcast/evaluate.hpp"
#include "pathcast/metrics.hpp"
#include "pathcast/planner.hpp"
#include "pathcast/providers.hpp"
#include "pathcast/reward_map.hpp"
#include "pathcast/synth.hpp"
#include "pathcast/version.hpp"

namespace py = pybind11;
using namespace pathcast;

namespace {

using PointList = std::vector<std::pair<int, int>>;

PathSeq to_path(const PointList& points) {
    PathSeq path;
    path.reserve(points.size());
    for (const auto& [x, y] : points) path.push_back(Position{x, y});
    return path;
}

PointList from_path(const PathSeq& path) {
    PointList points;
    points.reserve(path.size());
    for (const Position& p : path) points.emplace_back(p.x, p.y);
    return points;
}

py::array_t<double> field_to_numpy(const ScalarField& field) {
    py::array_t<double> out({field.height(), field.width()});
    auto view = out.mutable_unchecked<2>();
    for (int y = 0; y < field.height(); ++y)
        for (int x = 0; x < field.width(); ++x) view(y, x) = field.at(x, y);
    return out;
}

ScalarField numpy_to_field(const py::array_t<double, py::array::c_style | py::array::forcecast>& array) {
    if (array.ndim() != 2) {
        throw InputError("expected a 2-D array (rows, columns)");
    }
    ScalarField field(static_cast<int>(array.shape(1)), static_cast<int>(array.shape(0)));
    auto view = array.unchecked<2>();
    for (int y = 0; y < field.height(); ++y)
        for (int x = 0; x < field.width(); ++x) field.at(x, y) = view(y, x);
    return field;
}

struct PlannerArgs {
    double alpha = -10.0;
    double gamma = 0.5;
    double epsilon = 5.0;
    int top = 10;
    int window = 0;
    int stride = 0;
    int probe_distance = 0;
    int downsample = 1;
    std::string provider = "auto";
    double constant_reward = 1.0;
    std::string orientation = "auto";
    double theta = 0.0;

    PlannerConfig config() const {
        PlannerConfig cfg;
        cfg.alpha = alpha;
        cfg.gamma = gamma;
        cfg.epsilon = epsilon;
        cfg.downsample = downsample;
        if (window > 0) cfg.window = window;
        if (stride > 0) cfg.stride = stride;
        if (probe_distance > 0) cfg.probe_distance = probe_distance;
        cfg.validate();
        return cfg;
    }

    ProviderChoice choice() const {
        ProviderChoice c;
        c.reward = provider;
        c.constant_value = constant_reward;
        c.orientation = orientation;
        c.fixed_theta = theta;
        return c;
    }
};

const ObjectRecord& object_at(const SceneDescriptor& scene, int index) {
    if (index < 0 || index >= static_cast<int>(scene.objects.size())) {
        throw InputError("object index " + std::to_string(index) + " out of range");
    }
    return scene.objects[static_cast<std::size_t>(index)];
}

PredictOutcome run_predict(const SceneDescriptor& scene, int object_index,
                           const PlannerArgs& args) {
    PlannerConfig cfg = args.config();
    const ObjectRecord& object = object_at(scene, object_index);
    const int d = cfg.probe_distance ? *cfg.probe_distance
                                     : diagonal_distance(object.box, cfg.downsample);
    ResolvedProviders providers =
        make_providers(scene, object, args.choice(), cfg.downsample, std::max(d, 8));
    if (providers.reward_mode == "file" && !cfg.window) {
        cfg.window = 1;
        cfg.stride = 1;
    }
    return predict(scene, object, *providers.reward, *providers.orientation, cfg,
                   args.top);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Visual path prediction: reward/cost maps, grid planning and evaluation";
    m.attr("__version__") = PATHCAST_VERSION;

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<PlanningError>(m, "PlanningError", PyExc_RuntimeError);

    m.def("wrap_angle", &Angle::normalize, py::arg("radians"),
          "Normalize an angle into (-pi, pi]");
    m.def(
        "angular_difference",
        [](double a, double b) { return angular_difference(Angle(a), Angle(b)); },
        py::arg("a"), py::arg("b"), "Angular difference in [0, pi]");
    m.def(
        "direction_between",
        [](std::pair<int, int> a, std::pair<int, int> b) {
            return direction_between(Position{a.first, a.second},
                                     Position{b.first, b.second})
                .radians();
        },
        py::arg("from_cell"), py::arg("to_cell"),
        "Heading of the ray between two grid cells (y grows downward)");
    m.def(
        "diagonal_distance",
        [](int width, int height, int downsample) {
            return diagonal_distance(BoundingBox{0, 0, width, height}, downsample);
        },
        py::arg("width"), py::arg("height"), py::arg("downsample") = 1,
        "Probe distance d for a bounding box");
    m.def(
        "orientation_loss",
        [](double gt, double est) { return orientation_loss(Angle(gt), Angle(est)); },
        py::arg("ground_truth"), py::arg("estimate"),
        "Squared angular difference, in [0, pi^2]");
    m.def(
        "mhd",
        [](const PointList& a, const PointList& b) { return mhd(to_path(a), to_path(b)); },
        py::arg("a"), py::arg("b"),
        "Modified Hausdorff distance between two point sequences");
    m.def(
        "to_cost_map",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& reward,
           double alpha, double gamma) {
            PlannerConfig cfg;
            cfg.alpha = alpha;
            cfg.gamma = gamma;
            return field_to_numpy(to_cost_map(numpy_to_field(reward), cfg));
        },
        py::arg("reward"), py::arg("alpha") = -10.0, py::arg("gamma") = 0.5,
        "Sigmoid reward-to-cost conversion, applied cell-wise");
    m.def(
        "path_cost_audit",
        [](const PointList& path,
           const py::array_t<double, py::array::c_style | py::array::forcecast>& cost,
           double theta_esti, int d, double epsilon) {
            PlannerConfig cfg;
            cfg.epsilon = epsilon;
            const PathCostAudit audit = path_cost_audit(
                to_path(path), numpy_to_field(cost), Angle(theta_esti), d, cfg);
            return py::make_tuple(audit.spatial, audit.orientation, audit.total);
        },
        py::arg("path"), py::arg("cost"), py::arg("theta_esti"), py::arg("d"),
        py::arg("epsilon") = 5.0,
        "(spatial, orientation, total) decomposition of a path's cost");

    py::class_<ObjectRecord>(m, "ObjectRecord")
        .def_property_readonly(
            "bbox",
            [](const ObjectRecord& r) {
                return py::make_tuple(r.box.left, r.box.top, r.box.width, r.box.height);
            })
        .def_property_readonly("orientation",
                               [](const ObjectRecord& r) -> py::object {
                                   if (!r.orientation) return py::none();
                                   return py::float_(r.orientation->radians());
                               })
        .def_property_readonly("trajectory",
                               [](const ObjectRecord& r) -> py::object {
                                   if (!r.trajectory) return py::none();
                                   return py::cast(from_path(*r.trajectory));
                               });

    py::class_<SceneDescriptor>(m, "Scene")
        .def_readonly("scene_id", &SceneDescriptor::scene_id)
        .def_readonly("width", &SceneDescriptor::width)
        .def_readonly("height", &SceneDescriptor::height)
        .def_readonly("objects", &SceneDescriptor::objects)
        .def_property_readonly("reward_map",
                               [](const SceneDescriptor& s) -> py::object {
                                   if (!s.reward_field) return py::none();
                                   return field_to_numpy(*s.reward_field);
                               })
        .def_property_readonly("obstacle_map",
                               [](const SceneDescriptor& s) -> py::object {
                                   if (!s.obstacle_field) return py::none();
                                   return field_to_numpy(*s.obstacle_field);
                               })
        .def("__repr__", [](const SceneDescriptor& s) {
            return "<Scene '" + s.scene_id + "' " + std::to_string(s.width) + "x" +
                   std::to_string(s.height) + ", " +
                   std::to_string(s.objects.size()) + " objects>";
        });

    m.def(
        "load_scene",
        [](const std::string& path) { return load_scene(path); }, py::arg("path"),
        "Load and validate a scene descriptor JSON document");

    m.def(
        "generate_synthetic_scene",
        [](std::uint64_t seed, int width, int height, int roads, int rects, int blobs,
           int blockers, int agents, double terrain_reward,
           std::optional<std::tuple<int, int, int>> wall) {
            SynthSpec spec;
            spec.width = width;
            spec.height = height;
            spec.road_count = roads;
            spec.rect_count = rects;
            spec.blob_count = blobs;
            spec.blocker_count = blockers;
            spec.agent_count = agents;
            spec.terrain_reward = terrain_reward;
            if (wall) {
                spec.wall = WallSpec{std::get<0>(*wall), std::get<1>(*wall),
                                     std::get<2>(*wall)};
            }
            return generate_synthetic_scene(seed, spec);
        },
        py::arg("seed"), py::arg("width") = 160, py::arg("height") = 90,
        py::arg("roads") = 3, py::arg("rects") = 6, py::arg("blobs") = 4,
        py::arg("blockers") = 10, py::arg("agents") = 2, py::arg("terrain_reward") = 0.35,
        py::arg("wall") = py::none(),
        "Deterministic synthetic scene with embedded rasters and trajectories");

    m.def(
        "write_scene_directory",
        [](const SceneDescriptor& scene, const std::string& dir) {
            write_scene_directory(scene, dir);
        },
        py::arg("scene"), py::arg("dir"),
        "Write scene.json plus rasters and trajectories into a dataset directory");

    py::class_<PredictOutcome>(m, "Prediction")
        .def_property_readonly("paths",
                               [](const PredictOutcome& o) {
                                   std::vector<PointList> out;
                                   out.reserve(o.predictions.size());
                                   for (const PathSeq& p : o.predictions.paths)
                                       out.push_back(from_path(p));
                                   return out;
                               })
        .def_property_readonly(
            "lengths", [](const PredictOutcome& o) { return o.predictions.lengths; })
        .def_property_readonly(
            "theta_esti", [](const PredictOutcome& o) { return o.theta_esti.radians(); })
        .def_readonly("probe_distance", &PredictOutcome::probe_distance)
        .def_property_readonly(
            "start",
            [](const PredictOutcome& o) { return py::make_tuple(o.start.x, o.start.y); })
        .def_property_readonly(
            "reward_map", [](const PredictOutcome& o) { return field_to_numpy(o.reward_map); })
        .def_property_readonly(
            "cost_map", [](const PredictOutcome& o) { return field_to_numpy(o.cost_map); })
        .def("__repr__", [](const PredictOutcome& o) {
            return "<Prediction " + std::to_string(o.predictions.size()) + " paths>";
        });

    m.def(
        "predict",
        [](const SceneDescriptor& scene, int object_index, double alpha, double gamma,
           double epsilon, int top, int window, int stride, int probe_distance,
           int downsample, const std::string& provider, double constant_reward,
           const std::string& orientation, double theta) {
            PlannerArgs args;
            args.alpha = alpha;
            args.gamma = gamma;
            args.epsilon = epsilon;
            args.top = top;
            args.window = window;
            args.stride = stride;
            args.probe_distance = probe_distance;
            args.downsample = downsample;
            args.provider = provider;
            args.constant_reward = constant_reward;
            args.orientation = orientation;
            args.theta = theta;
            return run_predict(scene, object_index, args);
        },
        py::arg("scene"), py::arg("object_index") = 0, py::arg("alpha") = -10.0,
        py::arg("gamma") = 0.5, py::arg("epsilon") = 5.0, py::arg("top") = 10,
        py::arg("window") = 0, py::arg("stride") = 0, py::arg("probe_distance") = 0,
        py::arg("downsample") = 1, py::arg("provider") = "auto",
        py::arg("constant_reward") = 1.0, py::arg("orientation") = "auto",
        py::arg("theta") = 0.0,
        "End-to-end prediction of the top-n boundary paths for one object");

    m.def(
        "straight_line_baseline",
        [](const SceneDescriptor& scene, int object_index, const std::string& orientation,
           double theta, int downsample) {
            ProviderChoice choice;
            choice.orientation = orientation;
            choice.fixed_theta = theta;
            const ObjectRecord& object = object_at(scene, object_index);
            ResolvedProviders providers =
                make_providers(scene, object, choice, downsample, 8);
            return from_path(straight_line_baseline(scene, object,
                                                    *providers.orientation, downsample));
        },
        py::arg("scene"), py::arg("object_index") = 0, py::arg("orientation") = "auto",
        py::arg("theta") = 0.0, py::arg("downsample") = 1,
        "8-connected ray from the start cell along the estimated heading");

    m.def(
        "top_n_average",
        [](const PointList& ground_truth, const PredictOutcome& prediction, int n) {
            const TopNAverage avg =
                top_n_average(to_path(ground_truth), prediction.predictions, n);
            return py::make_tuple(avg.value, avg.count);
        },
        py::arg("ground_truth"), py::arg("prediction"), py::arg("n"),
        "(mean MHD over the top-n paths, number of paths used)");

    m.def(
        "evaluate_dataset",
        [](const std::string& dataset_dir, const std::vector<std::string>& methods,
           double alpha, double gamma, double epsilon, int top, int downsample) {
            PlannerConfig cfg;
            cfg.alpha = alpha;
            cfg.gamma = gamma;
            cfg.epsilon = epsilon;
            cfg.downsample = downsample;
            const EvalReport report = evaluate_dataset(dataset_dir, methods, cfg, top);
            auto row_dict = [](const EvalRow& row) {
                py::dict d;
                d["method"] = row.method;
                d["scene_id"] = row.scene_id;
                d["samples"] = row.samples;
                d["skipped"] = row.skipped;
                d["top1"] = row.top1;
                d["top5_avg"] = row.top5;
                d["top10_avg"] = row.top10;
                return d;
            };
            py::list rows, totals, errors;
            for (const EvalRow& row : report.rows) rows.append(row_dict(row));
            for (const EvalRow& row : report.totals) totals.append(row_dict(row));
            for (const std::string& e : report.errors) errors.append(e);
            py::dict out;
            out["rows"] = rows;
            out["totals"] = totals;
            out["errors"] = errors;
            return out;
        },
        py::arg("dataset_dir"),
        py::arg("methods") = std::vector<std::string>{"planner", "straightline"},
        py::arg("alpha") = -10.0, py::arg("gamma") = 0.5, py::arg("epsilon") = 5.0,
        py::arg("top") = 10, py::arg("downsample") = 1,
        "Per-scene and aggregate top-1/5/10 MHD for each method over a dataset");
}
