#include "pathcast/scalar_field.hpp"

#include <algorithm>

#include "pathcast/errors.hpp"

namespace pathcast {

ScalarField::ScalarField(int width, int height, double fill)
    : width_(width), height_(height) {
    if (width < 1 || height < 1) {
        throw InputError("scalar field dimensions must be positive");
    }
    values_.assign(static_cast<std::size_t>(width) * height, fill);
}

bool values_in_range(const ScalarField& field, double lo, double hi) {
    for (double v : field.values()) {
        if (v < lo || v > hi) return false;
    }
    return true;
}

ScalarField downsample_mean(const ScalarField& field, int factor) {
    if (factor < 1) throw InputError("downsample factor must be >= 1");
    if (factor == 1) return field;
    const int out_w = (field.width() + factor - 1) / factor;
    const int out_h = (field.height() + factor - 1) / factor;
    ScalarField out(out_w, out_h);
    for (int oy = 0; oy < out_h; ++oy) {
        for (int ox = 0; ox < out_w; ++ox) {
            double sum = 0.0;
            int count = 0;
            for (int y = oy * factor; y < std::min((oy + 1) * factor, field.height()); ++y) {
                for (int x = ox * factor; x < std::min((ox + 1) * factor, field.width()); ++x) {
                    sum += field.at(x, y);
                    ++count;
                }
            }
            out.at(ox, oy) = sum / count;
        }
    }
    return out;
}

ScalarField binarize(const ScalarField& field, double threshold) {
    ScalarField out = field;
    for (double& v : out.values()) {
        v = v >= threshold ? 1.0 : 0.0;
    }
    return out;
}

}  // namespace pathcast
