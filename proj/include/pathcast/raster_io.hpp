#ifndef PATHCAST_RASTER_IO_HPP_
#define PATHCAST_RASTER_IO_HPP_

#include <filesystem>

#include "pathcast/scalar_field.hpp"

namespace pathcast {

// Loads a grayscale raster into [0,1]. The format is sniffed from the
// content: "P2"/"P5" headers parse as PGM (pixel v maps to v/maxval),
// anything else parses as CSV of reals that must already lie in [0,1].
ScalarField load_scalar_field(const std::filesystem::path& path);

ScalarField parse_pgm(const std::string& bytes, const std::string& source_name);
ScalarField parse_field_csv(const std::string& text, const std::string& source_name);

// Binary PGM (P5, maxval 255); values are clamped to [0,1] and quantized.
void write_pgm(const ScalarField& field, const std::filesystem::path& path);

// Full-precision CSV (round-trips exactly through load_scalar_field).
void write_field_csv(const ScalarField& field, const std::filesystem::path& path);

}  // namespace pathcast

#endif  // PATHCAST_RASTER_IO_HPP_
