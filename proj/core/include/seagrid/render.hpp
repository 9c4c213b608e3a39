#pragma once

#include "seagrid/heatmap.hpp"

#include <string>

namespace seagrid {

struct RenderOptions {
    std::string colormap = "viridis"; ///< "viridis", "gray" or "heat".
    bool log_scale = false;           ///< log1p scaling instead of linear.
};

/// Write a single-band raster as an RGBA PNG, one image pixel per
/// raster cell, nodata rendered fully transparent. Rows are flipped so
/// north is up. Throws std::runtime_error on I/O failure.
void write_png(const Raster& raster, const RenderOptions& options, const std::string& path);

/// Write a plain-text grid: header lines ncols, nrows, xllcorner,
/// yllcorner, cellsize, NODATA_value, then row-major values north-first.
void write_ascii_grid(const Raster& raster, const std::string& path);

/// Render a raster to `png_path` and the matching text grid next to it
/// (same path with a .asc extension). Returns the text grid path.
std::string render(const Raster& raster, const RenderOptions& options,
                   const std::string& png_path);

/// Decode helper used by tests and tools: reads an RGBA PNG written by
/// write_png. Returns width/height and the pixel bytes, row-major from
/// the top.
struct DecodedImage {
    int width = 0;
    int height = 0;
    std::vector<unsigned char> rgba;
};
DecodedImage read_png(const std::string& path);

} // namespace seagrid
