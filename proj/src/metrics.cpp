#include "pathcast/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pathcast/errors.hpp"

namespace pathcast {

namespace {

double directed_mean(const PathSeq& from, const PathSeq& to) {
    double sum = 0.0;
    for (const Position& a : from) {
        double best = std::numeric_limits<double>::infinity();
        for (const Position& b : to) {
            const double dx = a.x - b.x;
            const double dy = a.y - b.y;
            best = std::min(best, dx * dx + dy * dy);
        }
        sum += std::sqrt(best);
    }
    return sum / static_cast<double>(from.size());
}

}  // namespace

double mhd(const PathSeq& a, const PathSeq& b) {
    if (a.empty() || b.empty()) {
        throw InputError("mhd requires non-empty point sequences");
    }
    return std::max(directed_mean(a, b), directed_mean(b, a));
}

TopNAverage top_n_average(const PathSeq& ground_truth,
                          const PredictionSet& predictions, int n) {
    if (n < 1) throw UsageError("top-n must be >= 1");
    if (predictions.empty()) {
        throw InputError("prediction set is empty");
    }
    TopNAverage out;
    out.count = static_cast<int>(
        std::min<std::size_t>(n, predictions.size()));
    double sum = 0.0;
    for (int k = 0; k < out.count; ++k) {
        sum += mhd(ground_truth, predictions.paths[k]);
    }
    out.value = sum / out.count;
    return out;
}

}  // namespace pathcast
