#ifndef PATHCAST_GEOMETRY_HPP_
#define PATHCAST_GEOMETRY_HPP_

#include <cstdint>
#include <vector>

namespace pathcast {

// Grid coordinate convention used throughout: image-style, origin at the
// top-left corner, x grows rightward, y grows downward. Angles are measured
// in this frame, so +pi/2 points down the image.
struct Position {
    int x = 0;
    int y = 0;

    friend bool operator==(const Position&, const Position&) = default;
};

// (row, column) ordering, i.e. y before x. This is the tie-break order for
// path terminals.
bool row_major_less(const Position& a, const Position& b);

int l1_distance(const Position& a, const Position& b);
int chebyshev_distance(const Position& a, const Position& b);

// An ordered sequence of grid cells; consecutive cells are 8-adjacent.
using PathSeq = std::vector<Position>;

bool is_eight_connected(const PathSeq& path);

// Heading stored normalized into (-pi, +pi].
class Angle {
public:
    Angle() = default;
    explicit Angle(double radians) : radians_(normalize(radians)) {}

    double radians() const { return radians_; }

    // Wraps any real into (-pi, +pi] by adding multiples of 2*pi.
    static double normalize(double radians);

    friend bool operator==(const Angle&, const Angle&) = default;

private:
    double radians_ = 0.0;
};

// Angular difference between two headings, in [0, pi]:
// |a-b| when |a-b| <= pi, otherwise 2*pi - |a-b|.
double angular_difference(Angle a, Angle b);

// Heading of the ray from `from` to `to` (two-argument arctangent of
// (dy, dx) in the y-down frame). The two cells must differ.
Angle direction_between(Position from, Position to);

// Object bounding box in scene raster pixels.
struct BoundingBox {
    int left = 0;    // top-left column
    int top = 0;     // top-left row
    int width = 1;   // > 0
    int height = 1;  // > 0

    friend bool operator==(const BoundingBox&, const BoundingBox&) = default;

    // Box center mapped onto the planning grid (pixels / downsample,
    // rounded to the nearest cell). Callers clamp/validate against grid
    // bounds.
    Position center_cell(int downsample = 1) const;
};

// Probe distance d: floor of the box diagonal, converted from pixels to
// grid cells by the downsampling factor (floor after scaling), at least 1.
int diagonal_distance(const BoundingBox& box, int downsample = 1);

}  // namespace pathcast

#endif  // PATHCAST_GEOMETRY_HPP_
