#ifndef PATHCAST_SCALAR_FIELD_HPP_
#define PATHCAST_SCALAR_FIELD_HPP_

#include <cstddef>
#include <vector>

#include "pathcast/geometry.hpp"

namespace pathcast {

// A W x H grid of reals, row-major. Carries both reward maps (values in
// [0,1]) and cost maps (values in (0,1)).
class ScalarField {
public:
    ScalarField() = default;
    ScalarField(int width, int height, double fill = 0.0);

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return values_.size(); }

    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width_ && y >= 0 && y < height_;
    }
    bool in_bounds(Position p) const { return in_bounds(p.x, p.y); }

    double at(int x, int y) const { return values_[index(x, y)]; }
    double& at(int x, int y) { return values_[index(x, y)]; }
    double at(Position p) const { return at(p.x, p.y); }
    double& at(Position p) { return at(p.x, p.y); }

    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    friend bool operator==(const ScalarField&, const ScalarField&) = default;

private:
    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * width_ + x;
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<double> values_;
};

// True when every value lies in [lo, hi].
bool values_in_range(const ScalarField& field, double lo, double hi);

// Reduces a field by an integer factor: each output cell is the mean of the
// covering factor x factor block (partial blocks at the right/bottom edges
// average only in-bounds pixels). Factor 1 returns the input unchanged.
ScalarField downsample_mean(const ScalarField& field, int factor);

// 1.0 where value >= threshold, else 0.0.
ScalarField binarize(const ScalarField& field, double threshold = 0.5);

}  // namespace pathcast

#endif  // PATHCAST_SCALAR_FIELD_HPP_
