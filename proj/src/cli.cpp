#include "pathcast/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathcast/baseline.hpp"
#include "pathcast/errors.hpp"
#include "pathcast/evaluate.hpp"
#include "pathcast/planner.hpp"
#include "pathcast/providers.hpp"
#include "pathcast/render.hpp"
#include "pathcast/reward_map.hpp"
#include "pathcast/synth.hpp"
#include "pathcast/version.hpp"

namespace pathcast::cli {

namespace {

using nlohmann::json;

std::string fmt_g(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Planner flags shared by predict, evaluate and render.
struct PlannerFlags {
    PlannerConfig cfg;
    ProviderChoice providers;
    int top_n = 10;
    std::uint64_t seed = 0;
    int window = 0;          // 0 = auto
    int stride = 0;          // 0 = auto
    int probe_distance = 0;  // 0 = auto

    void attach(CLI::App& app) {
        app.add_option("--alpha", cfg.alpha, "Obstacle tolerance of the reward->cost sigmoid")
            ->capture_default_str();
        app.add_option("--gamma", cfg.gamma, "Sigmoid midpoint, in (0, 1)")
            ->capture_default_str();
        app.add_option("--epsilon", cfg.epsilon, "Orientation penalty weight, >= 0")
            ->capture_default_str();
        app.add_option("--top", top_n, "Number of predicted paths to keep")
            ->capture_default_str();
        app.add_option("--window", window, "Sliding window size in cells (0 = auto)")
            ->capture_default_str();
        app.add_option("--stride", stride, "Sliding window stride in cells (0 = auto)")
            ->capture_default_str();
        app.add_option("--probe-distance", probe_distance,
                       "Override for the direction probe distance d (0 = auto)")
            ->capture_default_str();
        app.add_option("--downsample", cfg.downsample, "Pixels per planning grid cell")
            ->capture_default_str();
        app.add_option("--seed", seed, "Random seed (synthetic data only)")
            ->capture_default_str();
        app.add_option("--provider", providers.reward,
                       "Reward provider: auto, file, occupancy, constant")
            ->capture_default_str();
        app.add_option("--constant-reward", providers.constant_value,
                       "Reward value for the constant provider")
            ->capture_default_str();
        app.add_option("--orientation", providers.orientation,
                       "Orientation provider: auto, declared, trajectory, fixed")
            ->capture_default_str();
        app.add_option("--theta", providers.fixed_theta,
                       "Heading in radians for the fixed orientation provider")
            ->capture_default_str();
    }

    PlannerConfig resolve() const {
        PlannerConfig out = cfg;
        if (window > 0) out.window = window;
        if (stride > 0) out.stride = stride;
        if (probe_distance > 0) out.probe_distance = probe_distance;
        if (window < 0 || stride < 0 || probe_distance < 0) {
            throw UsageError("window, stride and probe distance must be >= 0");
        }
        if (top_n < 1) throw UsageError("--top must be >= 1");
        out.validate();
        return out;
    }

    std::string provenance(const std::string& subcommand) const {
        std::ostringstream out;
        out << "pathcast " << PATHCAST_VERSION << " | " << subcommand
            << " | alpha=" << fmt_g(cfg.alpha) << " gamma=" << fmt_g(cfg.gamma)
            << " epsilon=" << fmt_g(cfg.epsilon) << " top=" << top_n
            << " window=" << (window > 0 ? std::to_string(window) : "auto")
            << " stride=" << (stride > 0 ? std::to_string(stride) : "auto")
            << " probe_distance="
            << (probe_distance > 0 ? std::to_string(probe_distance) : "auto")
            << " downsample=" << cfg.downsample << " seed=" << seed
            << " provider=" << providers.reward
            << " orientation=" << providers.orientation;
        return std::move(out).str();
    }
};

// "flags > config file > defaults": values from the file apply only to
// options the command line left untouched. Format is flat TOML-style
// key = value lines with '#' comments.
void apply_config_file(CLI::App& cmd, const std::string& config_path) {
    if (config_path.empty()) return;
    std::ifstream in(config_path);
    if (!in) throw InputError(config_path + ": cannot open config file");
    std::string line;
    int line_no = 0;
    auto trim = [](std::string s) {
        const auto first = s.find_first_not_of(" \t");
        if (first == std::string::npos) return std::string();
        const auto last = s.find_last_not_of(" \t");
        return s.substr(first, last - first + 1);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError(config_path + ":" + std::to_string(line_no) +
                             ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
            value = value.substr(1, value.size() - 2);
        }
        if (key == "config") {
            throw UsageError(config_path + ": config files cannot nest");
        }
        CLI::Option* op = cmd.get_option_no_throw("--" + key);
        if (op == nullptr) {
            throw UsageError(config_path + ":" + std::to_string(line_no) +
                             ": unknown config key '" + key + "'");
        }
        if (op->count() > 0) continue;  // explicit flag wins
        op->add_result(value);
        op->run_callback();
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError(path.string() + ": cannot open for writing");
    out << text;
    if (!out) throw InputError(path.string() + ": write failed");
}

void write_bytes_file(const std::filesystem::path& path,
                      const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError(path.string() + ": cannot open for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw InputError(path.string() + ": write failed");
}

const ObjectRecord& object_at(const SceneDescriptor& scene, int index) {
    if (index < 0 || index >= static_cast<int>(scene.objects.size())) {
        throw InputError("scene '" + scene.scene_id + "' has no object " +
                         std::to_string(index) + " (objects: " +
                         std::to_string(scene.objects.size()) + ")");
    }
    return scene.objects[static_cast<std::size_t>(index)];
}

struct PredictProducts {
    PredictOutcome outcome;
    ResolvedProviders providers;
    PlannerConfig cfg;
};

PredictProducts run_predict(const SceneDescriptor& scene, int object_index,
                            const PlannerFlags& flags) {
    PredictProducts products;
    products.cfg = flags.resolve();
    const ObjectRecord& object = object_at(scene, object_index);
    const int d = products.cfg.probe_distance
                      ? *products.cfg.probe_distance
                      : diagonal_distance(object.box, products.cfg.downsample);
    products.providers = make_providers(scene, object, flags.providers,
                                        products.cfg.downsample, std::max(d, 8));
    if (products.providers.reward_mode == "file" && !products.cfg.window) {
        // Exact lookup maps need no sliding window.
        products.cfg.window = 1;
        products.cfg.stride = 1;
    }
    products.outcome = predict(scene, object, *products.providers.reward,
                               *products.providers.orientation, products.cfg,
                               flags.top_n);
    return products;
}

json prediction_json(const SceneDescriptor& scene, int object_index,
                     const PredictProducts& products, int top_n) {
    const PredictOutcome& outcome = products.outcome;
    json config;
    config["alpha"] = products.cfg.alpha;
    config["gamma"] = products.cfg.gamma;
    config["epsilon"] = products.cfg.epsilon;
    config["d"] = outcome.probe_distance;
    config["window"] = outcome.window;
    config["stride"] = outcome.stride;
    config["downsample"] = products.cfg.downsample;
    config["top"] = top_n;
    config["reward_provider"] = products.providers.reward_mode;
    config["orientation_provider"] = products.providers.orientation_mode;

    json paths = json::array();
    for (std::size_t k = 0; k < outcome.predictions.size(); ++k) {
        json cells = json::array();
        for (const Position& p : outcome.predictions.paths[k]) {
            cells.push_back({p.x, p.y});
        }
        paths.push_back({{"length", outcome.predictions.lengths[k]},
                         {"cells", std::move(cells)}});
    }

    json doc;
    doc["version"] = PATHCAST_VERSION;
    doc["scene_id"] = scene.scene_id;
    doc["object_index"] = object_index;
    doc["theta_esti"] = outcome.theta_esti.radians();
    doc["config"] = std::move(config);
    doc["paths"] = std::move(paths);
    return doc;
}

std::optional<ScalarField> grid_obstacles_for(const SceneDescriptor& scene,
                                              int downsample) {
    if (!scene.obstacle_field) return std::nullopt;
    return binarize(downsample_mean(*scene.obstacle_field, downsample));
}

std::optional<PathSeq> grid_ground_truth_for(const ObjectRecord& object,
                                             int downsample) {
    if (!object.trajectory) return std::nullopt;
    PathSeq cells;
    for (const Position& p : *object.trajectory) {
        const Position cell{p.x / downsample, p.y / downsample};
        if (cells.empty() || !(cells.back() == cell)) cells.push_back(cell);
    }
    return cells;
}

void render_to_file(const std::filesystem::path& out_path,
                    const PredictOutcome& outcome,
                    const std::optional<ScalarField>& obstacles,
                    const std::optional<PathSeq>& gt, const RenderOptions& options) {
    const std::string ext = out_path.extension().string();
    if (ext == ".svg") {
        write_text_file(out_path, render_svg(outcome, obstacles, gt, options));
    } else if (ext == ".ppm") {
        write_bytes_file(out_path, render_ppm(outcome, obstacles, gt, options));
    } else {
        throw UsageError("render output must end in .svg or .ppm, got '" +
                         out_path.string() + "'");
    }
}

int cmd_predict(const std::string& scene_path, int object_index,
                const std::string& out_path, const std::string& render_path,
                const PlannerFlags& flags, const RenderOptions& render_options) {
    const SceneDescriptor scene = load_scene(scene_path);
    const PredictProducts products = run_predict(scene, object_index, flags);
    const json doc = prediction_json(scene, object_index, products, flags.top_n);
    write_text_file(out_path, doc.dump(2) + "\n");
    if (!render_path.empty()) {
        RenderOptions options = render_options;
        options.provenance = flags.provenance("predict");
        render_to_file(render_path, products.outcome,
                       grid_obstacles_for(scene, products.cfg.downsample),
                       grid_ground_truth_for(object_at(scene, object_index),
                                             products.cfg.downsample),
                       options);
    }
    return 0;
}

int cmd_evaluate(const std::string& dataset_dir, const std::string& methods_csv,
                 const std::string& csv_path, const std::string& table_path,
                 const PlannerFlags& flags) {
    std::vector<std::string> methods;
    std::stringstream ss(methods_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) methods.push_back(item);
    }
    const PlannerConfig cfg = flags.resolve();
    const EvalReport report = evaluate_dataset(dataset_dir, methods, cfg, flags.top_n);
    const std::string provenance =
        flags.provenance("evaluate") + " methods=" + methods_csv;
    write_text_file(csv_path, report_csv(report, provenance));
    const std::string table = report_table(report, provenance);
    write_text_file(table_path, table);
    std::cout << table;
    return 0;
}

int cmd_synth(const std::string& out_dir, int count, const SynthSpec& spec,
              const std::string& wall_arg, std::uint64_t seed) {
    SynthSpec resolved = spec;
    if (!wall_arg.empty()) {
        WallSpec wall;
        if (std::sscanf(wall_arg.c_str(), "%d,%d,%d", &wall.column, &wall.gap_row,
                        &wall.gap_height) != 3) {
            throw UsageError("--wall expects 'column,gap_row,gap_height'");
        }
        resolved.wall = wall;
    }
    if (count < 1) throw UsageError("--count must be >= 1");
    resolved.validate();
    for (int i = 0; i < count; ++i) {
        SceneDescriptor scene = generate_synthetic_scene(mix_seed(seed, i), resolved);
        char name[32];
        std::snprintf(name, sizeof name, "scene_%04d", i);
        scene.scene_id = name;
        write_scene_directory(scene, std::filesystem::path(out_dir) / name);
    }
    return 0;
}

int cmd_render(const std::string& scene_path, const std::string& pred_path,
               const std::string& out_path, PlannerFlags flags,
               const RenderOptions& render_options) {
    const SceneDescriptor scene = load_scene(scene_path);

    std::ifstream in(pred_path, std::ios::binary);
    if (!in) throw InputError(pred_path + ": cannot open file");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(pred_path + ": " + std::string(e.what()));
    }
    int object_index = 0;
    PredictionSet loaded;
    try {
        object_index = doc.at("object_index").get<int>();
        const json& config = doc.at("config");
        flags.cfg.alpha = config.at("alpha").get<double>();
        flags.cfg.gamma = config.at("gamma").get<double>();
        flags.cfg.epsilon = config.at("epsilon").get<double>();
        flags.cfg.downsample = config.at("downsample").get<int>();
        flags.probe_distance = config.at("d").get<int>();
        flags.window = config.at("window").get<int>();
        flags.stride = config.at("stride").get<int>();
        flags.top_n = config.at("top").get<int>();
        flags.providers.reward = config.at("reward_provider").get<std::string>();
        flags.providers.orientation =
            config.at("orientation_provider").get<std::string>();
        for (const json& entry : doc.at("paths")) {
            PathSeq path;
            for (const json& cell : entry.at("cells")) {
                path.push_back(Position{cell.at(0).get<int>(), cell.at(1).get<int>()});
            }
            loaded.paths.push_back(std::move(path));
            loaded.lengths.push_back(entry.at("length").get<double>());
        }
    } catch (const json::exception& e) {
        throw InputError(pred_path + ": not a prediction document: " + e.what());
    }

    PredictProducts products = run_predict(scene, object_index, flags);
    // The document is the artifact being drawn; the recomputed maps are only
    // the backdrop.
    products.outcome.predictions = std::move(loaded);

    RenderOptions options = render_options;
    options.provenance = flags.provenance("render");
    render_to_file(out_path, products.outcome,
                   grid_obstacles_for(scene, products.cfg.downsample),
                   grid_ground_truth_for(object_at(scene, object_index),
                                         products.cfg.downsample),
                   options);
    return 0;
}

void emit_error(const char* kind, const std::string& message) {
    json line;
    line["error"] = kind;
    line["message"] = message;
    std::cerr << line.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"Visual path prediction over grid scenes"};
    app.set_version_flag("--version", PATHCAST_VERSION);
    app.require_subcommand(1);

    // predict
    CLI::App* predict_cmd =
        app.add_subcommand("predict", "Predict boundary paths for one object");
    std::string scene_path, pred_out, render_path;
    int object_index = 0;
    PlannerFlags predict_flags;
    RenderOptions predict_render;
    predict_cmd->add_option("--scene", scene_path, "Scene descriptor JSON")->required();
    predict_cmd->add_option("--object", object_index, "Object index in the scene")
        ->capture_default_str();
    predict_cmd->add_option("--out", pred_out, "Prediction JSON output path")->required();
    predict_cmd->add_option("--render", render_path, "Optional figure output (.svg/.ppm)");
    predict_cmd->add_option("--cell-size", predict_render.cell_size, "Figure pixels per cell")
        ->capture_default_str();
    predict_flags.attach(*predict_cmd);
    std::string predict_config;
    predict_cmd->add_option("--config", predict_config, "TOML-style key=value defaults");

    // evaluate
    CLI::App* evaluate_cmd =
        app.add_subcommand("evaluate", "Score methods against ground truth over a dataset");
    std::string dataset_dir, methods_csv = "planner,straightline,uniform";
    std::string csv_path = "report.csv", table_path = "report.txt";
    PlannerFlags evaluate_flags;
    evaluate_cmd->add_option("--dataset", dataset_dir, "Dataset directory")->required();
    evaluate_cmd->add_option("--methods", methods_csv, "Comma-separated method list")
        ->capture_default_str();
    evaluate_cmd->add_option("--csv", csv_path, "CSV report output path")
        ->capture_default_str();
    evaluate_cmd->add_option("--table", table_path, "Text table output path")
        ->capture_default_str();
    evaluate_flags.attach(*evaluate_cmd);
    std::string evaluate_config;
    evaluate_cmd->add_option("--config", evaluate_config, "TOML-style key=value defaults");

    // synth
    CLI::App* synth_cmd =
        app.add_subcommand("synth", "Generate a seeded synthetic dataset");
    std::string synth_out, wall_arg;
    int synth_count = 1;
    std::uint64_t synth_seed = 0;
    SynthSpec spec;
    synth_cmd->add_option("--out", synth_out, "Dataset output directory")->required();
    synth_cmd->add_option("--count", synth_count, "Number of scenes")->capture_default_str();
    synth_cmd->add_option("--seed", synth_seed, "Base random seed")->capture_default_str();
    synth_cmd->add_option("--width", spec.width, "Grid width in cells")->capture_default_str();
    synth_cmd->add_option("--height", spec.height, "Grid height in cells")->capture_default_str();
    synth_cmd->add_option("--roads", spec.road_count, "Road strips per scene")->capture_default_str();
    synth_cmd->add_option("--rects", spec.rect_count, "Rectangle obstacles per scene")
        ->capture_default_str();
    synth_cmd->add_option("--blobs", spec.blob_count, "Blob obstacles per scene")
        ->capture_default_str();
    synth_cmd->add_option("--blockers", spec.blocker_count, "On-road 2x2 obstacles per scene")
        ->capture_default_str();
    synth_cmd->add_option("--agents", spec.agent_count, "Agents per scene")->capture_default_str();
    synth_cmd->add_option("--terrain-reward", spec.terrain_reward, "Off-road reward value")
        ->capture_default_str();
    synth_cmd->add_option("--wall", wall_arg, "Obstacle wall 'column,gap_row,gap_height'");
    std::string synth_config;
    synth_cmd->add_option("--config", synth_config, "TOML-style key=value defaults");

    // render
    CLI::App* render_cmd = app.add_subcommand("render", "Draw a prediction as SVG or PPM");
    std::string render_scene, render_pred, render_out;
    PlannerFlags render_flags;
    RenderOptions render_options;
    render_cmd->add_option("--scene", render_scene, "Scene descriptor JSON")->required();
    render_cmd->add_option("--pred", render_pred, "Prediction JSON")->required();
    render_cmd->add_option("--out", render_out, "Output path (.svg/.ppm)")->required();
    render_cmd->add_option("--cell-size", render_options.cell_size, "Figure pixels per cell")
        ->capture_default_str();
    render_cmd->add_option("--background", render_options.background,
                           "Backdrop shading: reward or cost")
        ->capture_default_str();
    bool no_gt = false;
    render_cmd->add_flag("--no-gt", no_gt, "Hide the ground-truth trajectory");
    render_flags.attach(*render_cmd);
    std::string render_config;
    render_cmd->add_option("--config", render_config, "TOML-style key=value defaults");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        std::cout << PATHCAST_VERSION << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        emit_error("usage", e.what());
        return 1;
    }

    try {
        if (predict_cmd->parsed()) {
            apply_config_file(*predict_cmd, predict_config);
            return cmd_predict(scene_path, object_index, pred_out, render_path,
                               predict_flags, predict_render);
        }
        if (evaluate_cmd->parsed()) {
            apply_config_file(*evaluate_cmd, evaluate_config);
            return cmd_evaluate(dataset_dir, methods_csv, csv_path, table_path,
                                evaluate_flags);
        }
        if (synth_cmd->parsed()) {
            apply_config_file(*synth_cmd, synth_config);
            return cmd_synth(synth_out, synth_count, spec, wall_arg, synth_seed);
        }
        if (render_cmd->parsed()) {
            apply_config_file(*render_cmd, render_config);
            render_options.show_ground_truth = !no_gt;
            return cmd_render(render_scene, render_pred, render_out, render_flags,
                              render_options);
        }
        emit_error("usage", "no subcommand given");
        return 1;
    } catch (const UsageError& e) {
        emit_error("usage", e.what());
        return 1;
    } catch (const InputError& e) {
        emit_error("input", e.what());
        return 2;
    } catch (const PlanningError& e) {
        emit_error("planning", e.what());
        return 3;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 3;
    }
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

}  // namespace pathcast::cli
