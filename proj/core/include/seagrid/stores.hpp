#pragma once

#include "seagrid/ais.hpp"
#include "seagrid/cluster.hpp"
#include "seagrid/grid.hpp"
#include "seagrid/heatmap.hpp"
#include "seagrid/partition.hpp"
#include "seagrid/trajectory.hpp"

#include <string>
#include <vector>

// On-disk layouts. All binary stores are little-endian, open with an
// 8-byte magic and a u32 format version, and reject unknown versions on
// read. Optional floating-point fields use NaN as the absent sentinel;
// optional strings use a presence byte.
//
//   records store (columnar), magic "SGRECS1\n", version 1:
//     u64 row count, then full-length column arrays in fixed order:
//     t i64[], lng f64[], lat f64[], x f64[], y f64[], mmsi u32[],
//     sog f64[], cog f64[], heading f64[], draught f64[],
//     dim_bow f64[], dim_stern f64[], dim_port f64[], dim_starboard f64[]
//     (NaN = absent), then three string columns (nav_status, ship_type,
//     destination): presence u8[], u32 lengths[], concatenated bytes.
//
//   trajectory store, magic "SGTRAJ1\n", version 1:
//     u64 count, then per trajectory: id u64, mmsi u32, infer_stopped u8,
//     duration f64, length f64, destination (u32 length + bytes),
//     point count u32, then per point: t f64, x f64, y f64, sog f64,
//     cog f64, heading f64, draught f64 (NaN = absent).
//
//   cell-fact store (one file per granularity), magic "SGCELL1\n",
//   version 1: u32 granularity, u64 count, then per event: col u32,
//     row u32, trajectory id u64, mmsi u32, t_enter f64, t_exit f64,
//     duration f64, avg_sog f64, delta_cog f64, delta_heading f64,
//     min_draught f64, date_id u32, infer_stopped u8.
//
//   heatmap tile store, magic "SGTILE1\n", version 1 (row-based):
//     u64 count, then per tile: division_id u32, type_id u32,
//     resolution u32, temporal_resolution u32, date_id u32,
//     anchor col u32, anchor row u32, band count u8, then per band
//     (5000/resolution)^2 f64 pixels, lower-left row-major.
//
//   division file (text): line 1 "domain,x_min,y_min,x_max,y_max,lattice",
//   line 2 the column header, then one "id,x_min,y_min,x_max,y_max,count"
//   line per division.

namespace seagrid {

void write_record_store(const std::string& path, const std::vector<AisRecord>& records);
std::vector<AisRecord> read_record_store(const std::string& path);

void write_rejections_csv(const std::string& path, const std::vector<RejectionRecord>& rejections);

void write_trajectory_store(const std::string& path, const std::vector<Trajectory>& trajectories);
std::vector<Trajectory> read_trajectory_store(const std::string& path);

void write_cell_store(const std::string& path, int granularity,
                      const std::vector<CellEvent>& events);
std::vector<CellEvent> read_cell_store(const std::string& path, int* granularity_out = nullptr);

void write_tile_store(const std::string& path, const std::vector<StoredTile>& tiles);
std::vector<StoredTile> read_tile_store(const std::string& path);

struct DivisionFile {
    Rect domain;
    int lattice = kBaseGranularity;
    std::vector<SpatialDivision> divisions;
};

void write_division_file(const std::string& path, const DivisionFile& file);
DivisionFile read_division_file(const std::string& path);

/// Land polygons for the on-land cleaning rule: a JSON array of objects
/// with a "ring" member listing [x, y] vertices in projected meters.
LandMask read_land_mask(const std::string& path);

/// One benchmark report as a JSON document.
void write_benchmark_report(const std::string& path, const BenchmarkReport& report,
                            double scale_up_percent);

} // namespace seagrid
