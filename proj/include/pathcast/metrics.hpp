#ifndef PATHCAST_METRICS_HPP_
#define PATHCAST_METRICS_HPP_

#include "pathcast/planner.hpp"

namespace pathcast {

// Modified Hausdorff distance (Dubuisson-Jain, max of directed means):
//   mhd(A, B) = max(h(A, B), h(B, A)),
//   h(A, B)   = mean over a in A of min over b in B of |a - b|.
// Paths are treated as unordered point sets; distances are Euclidean in
// grid cells.
double mhd(const PathSeq& a, const PathSeq& b);

// Mean MHD between the ground truth and the top-n predictions. When fewer
// than n predictions exist the mean runs over what is available and `count`
// says how many were used.
struct TopNAverage {
    double value = 0.0;
    int count = 0;
};

TopNAverage top_n_average(const PathSeq& ground_truth,
                          const PredictionSet& predictions, int n);

}  // namespace pathcast

#endif  // PATHCAST_METRICS_HPP_
