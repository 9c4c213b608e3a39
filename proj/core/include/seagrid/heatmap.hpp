#pragma once

#include "seagrid/common.hpp"
#include "seagrid/grid.hpp"
#include "seagrid/partition.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace seagrid {

enum class AggKind : std::uint8_t { Sum, Min, Avg };

/// Which cell-event measure a heatmap type aggregates.
enum class Measure : std::uint8_t {
    Crossings,    ///< 1 per event.
    Duration,     ///< Seconds spent in the cell.
    DeltaHeading, ///< Degrees.
    DeltaCog,     ///< Degrees.
    Draught,      ///< Meters; events without a draught sample contribute nothing.
};

/// Metadata describing one pre-aggregated heatmap family. Averages are
/// carried as two bands (value sum + contribution count) so they stay
/// exact under any regrouping; SUM and MIN need a single band.
struct HeatmapType {
    int id = 0;
    std::string name;
    AggKind kind = AggKind::Sum;
    Measure measure = Measure::Crossings;
    int bands = 1; ///< 2 iff kind == Avg.
    std::string description;
};

/// The five built-in heatmap types: ship crossings, accumulated time,
/// average delta heading, average delta COG, minimum draught.
const std::vector<HeatmapType>& builtin_heatmap_types();

const HeatmapType* find_heatmap_type(const std::vector<HeatmapType>& types, int id);
const HeatmapType* find_heatmap_type(const std::vector<HeatmapType>& types,
                                     const std::string& name);

/// Per-day raster anchored at one 5000 m cell. The pixel grid exactly
/// tiles the anchor's 5x5 km rectangle: (5000/resolution)^2 pixels,
/// row-major from the lower-left, pixel (i, j) covering
/// [x0 + i*res, x0 + (i+1)*res) x [y0 + j*res, y0 + (j+1)*res).
struct HeatmapTile {
    CellKey anchor; ///< Always granularity 5000.
    int type_id = 0;
    int resolution = 50;              ///< Meters, one of the four granularities.
    int temporal_resolution = 86400;  ///< Seconds; daily tiles.
    std::uint32_t date_id = 0;
    int size = 0; ///< Pixels per side = 5000 / resolution.
    std::vector<double> band0; ///< NaN = nodata for 1-band tiles; value sums for Avg.
    std::vector<double> band1; ///< Contribution counts for Avg tiles, else empty.

    bool has_data(int i, int j) const;
};

/// Query/mosaic raster in domain coordinates. Pixels align with the
/// cell lattice: origin is a multiple of `resolution` from the domain
/// origin. band1 is non-empty while an AVG raster is still in two-band
/// form; finalize() collapses it.
struct Raster {
    double origin_x = 0.0;
    double origin_y = 0.0;
    int resolution = 50;
    int width = 0;
    int height = 0;
    std::vector<double> band0; ///< Row-major from the lower-left; NaN = nodata.
    std::vector<double> band1;

    std::size_t index(int i, int j) const { return std::size_t(j) * width + i; }
    bool has_data(int i, int j) const;
};

/// Roll cell events up into per-day tiles for every requested type and
/// resolution. Events must already be at the tile's resolution; a tile
/// exists exactly for the (anchor, type, resolution, day) combinations
/// with at least one contributing event. Output is canonically sorted
/// by (type, resolution, date, anchor row, anchor col).
std::vector<HeatmapTile> rollup_heatmaps(const std::vector<CellEvent>& events,
                                         const std::vector<HeatmapType>& types, int resolution,
                                         const GridDomain& domain);

/// Collapse a two-band (sum, count) raster to its average: sum/count
/// where count > 0, nodata elsewhere.
Raster finalize(const Raster& two_band);
HeatmapTile finalize(const HeatmapTile& two_band);

/// A tile pinned to the spatial division that owns its anchor.
struct StoredTile {
    int division_id = 0;
    HeatmapTile tile;
};

/// Assign every tile to its anchor's division (row-based storage keyed
/// by division, anchor, type, resolution, date).
std::vector<StoredTile> place_tiles(std::vector<HeatmapTile> tiles, const DivisionIndex& index,
                                    const GridDomain& domain);

struct HeatmapQuery {
    Rect area;
    std::uint32_t date_from = 0; ///< Inclusive YYYYMMDD.
    std::uint32_t date_to = 0;   ///< Inclusive.
    int type_id = 0;
    int resolution = 50;
};

/// Two-phase distributed heatmap query: phase 1 aggregates each
/// division's matching tiles locally (SUM/MIN elementwise; AVG as
/// band-wise sums), phase 2 mosaics the per-division rasters into one
/// output clipped to the query area. Because every anchor lives in
/// exactly one division, the result is identical to a single-phase
/// aggregation over all tiles. AVG results are returned in two-band
/// form; call finalize() at the query boundary.
/// Throws std::domain_error when the area misses the domain, and
/// std::invalid_argument for an unknown type/resolution or empty date
/// range. An empty result yields an all-nodata raster of the requested
/// shape.
Raster query_heatmap(const std::vector<StoredTile>& store, const std::vector<HeatmapType>& types,
                     const HeatmapQuery& query, const GridDomain& domain,
                     const DivisionIndex& divisions);

/// Aggregate one tile into a raster window (shared by both query phases
/// and by rollup verification). Tiles must be aggregated in ascending
/// (anchor, date) order for bit-reproducible sums.
void aggregate_tile(Raster& out, const HeatmapTile& tile, AggKind kind, const GridDomain& domain);

/// The raster window (pixel lattice aligned to the domain origin) that
/// covers `area` clipped to the domain, at `resolution`.
Raster make_query_window(const Rect& area, int resolution, const GridDomain& domain, int bands);

} // namespace seagrid
