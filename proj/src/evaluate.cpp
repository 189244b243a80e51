#include "pathcast/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "pathcast/baseline.hpp"
#include "pathcast/errors.hpp"
#include "pathcast/reward_map.hpp"

namespace pathcast {

namespace {

// Ground truth mapped onto the planning grid; consecutive duplicates from
// the downsampling collapse are dropped.
PathSeq trajectory_to_grid(const PathSeq& trajectory, int downsample) {
    PathSeq cells;
    for (const Position& p : trajectory) {
        const Position cell{p.x / downsample, p.y / downsample};
        if (cells.empty() || !(cells.back() == cell)) {
            cells.push_back(cell);
        }
    }
    return cells;
}

struct MethodStats {
    int samples = 0;
    double top1_sum = 0.0;
    double top5_sum = 0.0;
    double top10_sum = 0.0;
};

struct ObjectMetrics {
    double top1 = 0.0;
    double top5 = 0.0;
    double top10 = 0.0;
};

ObjectMetrics metrics_against(const PathSeq& gt, const PredictionSet& preds,
                              int top_n) {
    ObjectMetrics m;
    m.top1 = mhd(gt, preds.paths.front());
    m.top5 = top_n_average(gt, preds, std::min(5, top_n)).value;
    m.top10 = top_n_average(gt, preds, std::min(10, top_n)).value;
    return m;
}

std::string format_metric(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

EvalReport evaluate_dataset(const std::filesystem::path& dataset_dir,
                            const std::vector<std::string>& methods,
                            const PlannerConfig& cfg, int top_n) {
    cfg.validate();
    if (methods.empty()) throw UsageError("no evaluation methods selected");
    for (const std::string& m : methods) {
        if (std::find(known_eval_methods().begin(), known_eval_methods().end(), m) ==
            known_eval_methods().end()) {
            throw UsageError("unknown evaluation method '" + m + "'");
        }
    }
    if (!std::filesystem::is_directory(dataset_dir)) {
        throw InputError(dataset_dir.string() + ": not a directory");
    }

    // Deterministic scene discovery: sub-directory scene.json files plus
    // top-level descriptors, sorted by path.
    std::vector<std::filesystem::path> scene_files;
    for (const auto& entry : std::filesystem::directory_iterator(dataset_dir)) {
        if (entry.is_directory()) {
            const auto candidate = entry.path() / "scene.json";
            if (std::filesystem::is_regular_file(candidate)) {
                scene_files.push_back(candidate);
            }
        } else if (entry.path().extension() == ".json") {
            scene_files.push_back(entry.path());
        }
    }
    std::sort(scene_files.begin(), scene_files.end());
    if (scene_files.empty()) {
        throw InputError(dataset_dir.string() + ": no scene descriptors found");
    }

    EvalReport report;
    std::map<std::string, MethodStats> totals;
    std::map<std::string, std::map<std::string, MethodStats>> per_scene;
    std::map<std::string, int> skipped_per_scene;

    int loaded = 0;
    for (const auto& file : scene_files) {
        SceneDescriptor scene;
        try {
            scene = load_scene(file);
        } catch (const std::exception& e) {
            report.errors.push_back(e.what());
            continue;
        }
        ++loaded;
        int skipped = 0;
        for (std::size_t i = 0; i < scene.objects.size(); ++i) {
            const ObjectRecord& object = scene.objects[i];
            const int d = cfg.probe_distance
                              ? *cfg.probe_distance
                              : diagonal_distance(object.box, cfg.downsample);
            if (!object.trajectory) {
                ++skipped;
                continue;
            }
            const PathSeq gt = trajectory_to_grid(*object.trajectory, cfg.downsample);
            if (static_cast<int>(gt.size()) < 2 * d) {
                ++skipped;
                continue;
            }

            // Evaluate all methods first so a failing object never skews the
            // per-method sample counts.
            std::map<std::string, ObjectMetrics> object_metrics;
            try {
                for (const std::string& method : methods) {
                    ProviderChoice choice;
                    PlannerConfig run_cfg = cfg;
                    if (method == "uniform") {
                        choice.reward = "constant";
                        choice.constant_value = 1.0;
                    }
                    ResolvedProviders providers = make_providers(
                        scene, object, choice, cfg.downsample, std::max(d, 8));
                    if (method != "uniform" && providers.reward_mode == "file" &&
                        !cfg.window) {
                        // Exact lookup maps need no sliding window.
                        run_cfg.window = 1;
                        run_cfg.stride = 1;
                    }
                    if (method == "straightline") {
                        PathSeq ray = straight_line_baseline(
                            scene, object, *providers.orientation, cfg.downsample);
                        const double value = mhd(gt, ray);
                        object_metrics[method] = ObjectMetrics{value, value, value};
                    } else {
                        const PredictOutcome outcome =
                            predict(scene, object, *providers.reward,
                                    *providers.orientation, run_cfg, top_n);
                        object_metrics[method] =
                            metrics_against(gt, outcome.predictions, top_n);
                    }
                }
            } catch (const std::exception& e) {
                report.errors.push_back(file.string() + ": object " +
                                        std::to_string(i) + ": " + e.what());
                ++skipped;
                continue;
            }

            for (const auto& [method, m] : object_metrics) {
                MethodStats& scene_stats = per_scene[scene.scene_id][method];
                scene_stats.samples += 1;
                scene_stats.top1_sum += m.top1;
                scene_stats.top5_sum += m.top5;
                scene_stats.top10_sum += m.top10;
                MethodStats& total = totals[method];
                total.samples += 1;
                total.top1_sum += m.top1;
                total.top5_sum += m.top5;
                total.top10_sum += m.top10;
            }
        }
        skipped_per_scene[scene.scene_id] = skipped;
        if (per_scene.find(scene.scene_id) == per_scene.end()) {
            // Scene with no usable objects still appears in the report.
            for (const std::string& method : methods) {
                per_scene[scene.scene_id][method] = MethodStats{};
            }
        }
    }
    if (loaded == 0) {
        throw InputError(dataset_dir.string() + ": no readable scene descriptors");
    }

    std::vector<std::string> sorted_methods = methods;
    std::sort(sorted_methods.begin(), sorted_methods.end());
    for (const auto& [scene_id, method_stats] : per_scene) {
        for (const std::string& method : sorted_methods) {
            const auto it = method_stats.find(method);
            const MethodStats stats =
                it == method_stats.end() ? MethodStats{} : it->second;
            EvalRow row;
            row.method = method;
            row.scene_id = scene_id;
            row.samples = stats.samples;
            row.skipped = skipped_per_scene[scene_id];
            if (stats.samples > 0) {
                row.top1 = stats.top1_sum / stats.samples;
                row.top5 = stats.top5_sum / stats.samples;
                row.top10 = stats.top10_sum / stats.samples;
            }
            report.rows.push_back(std::move(row));
        }
    }
    for (const std::string& method : sorted_methods) {
        const MethodStats& stats = totals[method];
        EvalRow row;
        row.method = method;
        row.scene_id = "TOTAL";
        row.samples = stats.samples;
        for (const auto& [scene_id, skipped] : skipped_per_scene) {
            row.skipped += skipped;
        }
        if (stats.samples > 0) {
            row.top1 = stats.top1_sum / stats.samples;
            row.top5 = stats.top5_sum / stats.samples;
            row.top10 = stats.top10_sum / stats.samples;
        }
        report.totals.push_back(std::move(row));
    }
    return report;
}

std::string report_csv(const EvalReport& report, const std::string& provenance) {
    std::ostringstream out;
    out << "# " << provenance << "\n";
    out << "method,scene_id,samples,top1,top5_avg,top10_avg\n";
    auto emit = [&out](const EvalRow& row) {
        out << row.method << "," << row.scene_id << "," << row.samples << ","
            << format_metric(row.top1) << "," << format_metric(row.top5) << ","
            << format_metric(row.top10) << "\n";
    };
    for (const EvalRow& row : report.rows) emit(row);
    for (const EvalRow& row : report.totals) emit(row);
    return std::move(out).str();
}

std::string report_table(const EvalReport& report, const std::string& provenance) {
    static constexpr const char* kHeaders[] = {"method",  "scene",   "samples",
                                               "skipped", "top1",    "top5_avg",
                                               "top10_avg"};
    std::vector<std::vector<std::string>> cells;
    auto add = [&cells](const EvalRow& row) {
        cells.push_back({row.method, row.scene_id, std::to_string(row.samples),
                         std::to_string(row.skipped), format_metric(row.top1),
                         format_metric(row.top5), format_metric(row.top10)});
    };
    for (const EvalRow& row : report.rows) add(row);
    for (const EvalRow& row : report.totals) add(row);

    std::size_t widths[7];
    for (int c = 0; c < 7; ++c) widths[c] = std::string(kHeaders[c]).size();
    for (const auto& row : cells) {
        for (int c = 0; c < 7; ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    std::ostringstream out;
    if (!provenance.empty()) out << "# " << provenance << "\n";
    auto emit_line = [&](const std::vector<std::string>& row) {
        for (int c = 0; c < 7; ++c) {
            out << row[c] << std::string(widths[c] - row[c].size() + 2, ' ');
        }
        out << "\n";
    };
    emit_line({kHeaders[0], kHeaders[1], kHeaders[2], kHeaders[3], kHeaders[4],
               kHeaders[5], kHeaders[6]});
    for (const auto& row : cells) emit_line(row);
    if (!report.errors.empty()) {
        out << "\nerrors:\n";
        for (const std::string& e : report.errors) out << "  " << e << "\n";
    }
    return std::move(out).str();
}

}  // namespace pathcast
