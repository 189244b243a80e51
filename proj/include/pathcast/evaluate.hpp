#ifndef PATHCAST_EVALUATE_HPP_
#define PATHCAST_EVALUATE_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "pathcast/metrics.hpp"
#include "pathcast/planner.hpp"

namespace pathcast {

struct EvalRow {
    std::string method;
    std::string scene_id;
    int samples = 0;
    int skipped = 0;  // objects without a usable ground truth
    double top1 = 0.0;
    double top5 = 0.0;
    double top10 = 0.0;
};

struct EvalReport {
    std::vector<EvalRow> rows;    // per (scene, method), scene then method asc
    std::vector<EvalRow> totals;  // one per method, sample-weighted means
    std::vector<std::string> errors;  // per-file failures, dataset order
};

inline const std::vector<std::string>& known_eval_methods() {
    static const std::vector<std::string> methods = {"planner", "straightline",
                                                     "uniform"};
    return methods;
}

// Runs every method over every scene descriptor found in the dataset
// directory (scene.json in subdirectories or *.json at the top level).
// Objects without a trajectory, or whose trajectory is shorter than 2*d
// cells, are skipped and counted. Unreadable scenes are reported in
// `errors`; a dataset with no scene files at all is an error.
EvalReport evaluate_dataset(const std::filesystem::path& dataset_dir,
                            const std::vector<std::string>& methods,
                            const PlannerConfig& cfg, int top_n = 10);

// CSV rows (method, scene_id, samples, top1, top5_avg, top10_avg) behind a
// single '#' provenance line.
std::string report_csv(const EvalReport& report, const std::string& provenance);

// Aligned human-readable table, skipped counts included.
std::string report_table(const EvalReport& report, const std::string& provenance = "");

}  // namespace pathcast

#endif  // PATHCAST_EVALUATE_HPP_
