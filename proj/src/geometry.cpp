#include "pathcast/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "pathcast/errors.hpp"

namespace pathcast {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
}

bool row_major_less(const Position& a, const Position& b) {
    if (a.y != b.y) return a.y < b.y;
    return a.x < b.x;
}

int l1_distance(const Position& a, const Position& b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

int chebyshev_distance(const Position& a, const Position& b) {
    return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

bool is_eight_connected(const PathSeq& path) {
    for (std::size_t i = 1; i < path.size(); ++i) {
        if (chebyshev_distance(path[i - 1], path[i]) != 1) return false;
    }
    return !path.empty();
}

double Angle::normalize(double radians) {
    if (!std::isfinite(radians)) {
        throw InputError("angle must be finite");
    }
    double r = std::remainder(radians, kTwoPi);  // lands in [-pi, pi]
    if (r <= -M_PI) r += kTwoPi;
    return r;
}

double angular_difference(Angle a, Angle b) {
    const double diff = std::fabs(a.radians() - b.radians());
    return diff <= M_PI ? diff : kTwoPi - diff;
}

Angle direction_between(Position from, Position to) {
    if (from == to) {
        throw InputError("direction between identical positions is undefined");
    }
    const double dy = static_cast<double>(to.y - from.y);
    const double dx = static_cast<double>(to.x - from.x);
    return Angle(std::atan2(dy, dx));
}

Position BoundingBox::center_cell(int downsample) const {
    const double cx = (left + width / 2.0) / downsample;
    const double cy = (top + height / 2.0) / downsample;
    return Position{static_cast<int>(std::llround(cx)),
                    static_cast<int>(std::llround(cy))};
}

int diagonal_distance(const BoundingBox& box, int downsample) {
    if (box.width < 1 || box.height < 1) {
        throw InputError("bounding box dimensions must be positive");
    }
    if (downsample < 1) {
        throw InputError("downsample factor must be >= 1");
    }
    const double diag =
        std::sqrt(static_cast<double>(box.width) * box.width +
                  static_cast<double>(box.height) * box.height);
    const int d = static_cast<int>(std::floor(diag / downsample));
    return std::max(d, 1);
}

}  // namespace pathcast
