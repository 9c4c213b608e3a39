#pragma once

#include "seagrid/heatmap.hpp"
#include "seagrid/partition.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace seagrid {

enum class AssignPolicy : std::uint8_t { RoundRobin };

/// Placement of spatially distributed data: one shard per division,
/// shards assigned to workers round-robin in ascending division id.
/// Cell facts, cell dimensions and heatmap tiles of one division share
/// the shard, so division-local joins never cross workers. Trajectories
/// are hash-distributed separately (trajectory_worker) and are *not*
/// co-located with their cells.
struct ShardMap {
    int worker_count = 1;
    std::vector<int> division_ids;  ///< Ascending.
    std::vector<int> shard_ids;     ///< shard_ids[i] belongs to division_ids[i].
    std::vector<int> worker_of_shard; ///< Parallel to shard_ids, 1-based worker ids.

    int shard_of_division(int division_id) const;
    int worker_of_division(int division_id) const;
};

/// Build the division->shard->worker map. Throws std::invalid_argument
/// when workers < 1.
ShardMap assign_shards(const std::vector<SpatialDivision>& divisions, int workers,
                       AssignPolicy policy = AssignPolicy::RoundRobin);

/// Worker holding a hash-distributed trajectory. Deliberately unrelated
/// to the spatial map: equal trajectory ids always land together, but
/// nothing aligns them with the divisions their points cross.
int trajectory_worker(std::uint64_t trajectory_id, int workers);

/// Linear execution cost of scanning raster data in a shard.
struct CostModel {
    double alpha = 1e-8; ///< Seconds per pixel.
    double beta = 1e-3;  ///< Fixed seconds per engaged shard.
};

/// Worker Time: the instant a worker finishes all shards located on it,
/// i.e. the maximum over that worker's shard completion times. Zero for
/// a shard-less worker.
double worker_time(std::span<const double> shard_completion_times);

struct WifResult {
    std::vector<double> per_worker;  ///< (max - t_j) / max; 0 for every argmax worker.
    double average_percent = 0.0;    ///< Normalized to [0, 100].
    bool degenerate = false;         ///< All worker times zero.
};

/// Worker Idle Fraction per worker plus the normalized average.
/// The raw average has upper bound 1 - 1/|workers| (one worker is never
/// idle), so it is rescaled by 1/(1 - 1/|workers|). With a single
/// worker the normalization is undefined and 0% is reported.
WifResult wif(std::span<const double> worker_times);

struct ShardTiming {
    int shard_id = 0;
    int division_id = 0;
    int worker_id = 0;
    std::uint64_t pixels = 0; ///< Raster values matched in this shard.
    double duration = 0.0;    ///< alpha * pixels + beta.
};

struct BenchmarkReport {
    std::string label;
    HeatmapQuery query;
    int workers = 1;
    std::vector<ShardTiming> shard_times;  ///< Engaged shards only.
    std::vector<double> worker_times;      ///< Per worker, index 0 = worker 1.
    std::vector<double> wif_per_worker;
    double average_wif_percent = 0.0;
    double runtime = 0.0;          ///< max Worker Time, seconds.
    double coordinator_time = 0.0; ///< Mosaic cost, reported separately.
    int engaged_shards = 0;
    bool degenerate = false;
};

/// Simulate one heatmap query against division-sharded tiles.
///
/// A shard is engaged when its division rectangle intersects the query
/// area; its shard time is alpha times the pixel volume of the tiles it
/// matches (bands * pixels per tile) plus beta. Shards on one worker
/// execute sequentially in ascending shard id, so a worker's time is
/// the completion time of its last shard. WIF metrics follow from the
/// worker times. Throws std::domain_error when the area misses the
/// divisions' domain.
BenchmarkReport simulate_query(const std::string& label, const HeatmapQuery& query,
                               const ShardMap& shards,
                               const std::vector<SpatialDivision>& divisions,
                               const std::vector<StoredTile>& store,
                               const std::vector<HeatmapType>& types, const CostModel& cost);

/// Scale-up of the same query between two worker counts, in percent:
/// 100% = same runtime, 200% = twice as fast. Throws std::domain_error
/// on a zero runtime.
double scale_up(const BenchmarkReport& report_1w, const BenchmarkReport& report_nw);

} // namespace seagrid
