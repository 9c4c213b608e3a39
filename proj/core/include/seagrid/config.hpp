#pragma once

#include "seagrid/cluster.hpp"
#include "seagrid/common.hpp"
#include "seagrid/heatmap.hpp"
#include "seagrid/trajectory.hpp"

#include <optional>
#include <string>
#include <vector>

namespace seagrid {

/// Parameters of the bundled synthetic fleet generator. Lanes are
/// narrow high-traffic corridors; lane_fraction of the ships sail them,
/// the rest wander the whole domain, which reproduces the skewed
/// traffic the spatial distribution is balanced against.
struct GeneratorConfig {
    int ships = 100;
    int points_per_ship = 400;
    double sample_interval_s = 10.0;
    std::uint32_t start_date = 20210301; ///< YYYYMMDD.
    int days = 1;
    double lane_fraction = 0.85; ///< Share of ships confined to lanes.
    int lanes = 3;
    double lane_coverage = 0.08; ///< Fraction of domain area the lanes cover.
    double min_speed_kn = 6.0;
    double max_speed_kn = 14.0;
    double stop_probability = 0.15; ///< Chance a ship anchors mid-voyage.
    std::uint64_t seed = 1;
};

struct PipelineConfig {
    std::vector<std::string> input_csv; ///< Raw AIS files, local paths.
    std::string output_dir = "out";

    double projection_lat_ref = 56.0;
    double projection_lng_ref = 10.0;

    bool clean_mmsi = true;
    bool clean_dimensions = true;
    bool clean_domain = true;
    double max_length_m = 500.0;
    double max_beam_m = 80.0;
    std::optional<std::string> land_file;

    TrajectoryParams trajectory;

    Rect domain{0.0, 0.0, 100'000.0, 100'000.0}; ///< Sides must be multiples of 5000 m.
    std::vector<int> granularities{50, 200, 1000, 5000};

    int division_budget = 400;
    std::string partition_method = "kd"; ///< "kd" or "quad".

    std::vector<HeatmapType> heatmap_types = builtin_heatmap_types();

    std::vector<int> bench_workers{1, 5};
    CostModel cost;

    GeneratorConfig generator;
};

/// All violations found in a config, empty when it is valid.
std::vector<std::string> validate(const PipelineConfig& config);

PipelineConfig load_config(const std::string& path);

/// Write the effective config (defaults applied) so a run can be
/// reproduced from its output directory alone.
void save_config(const PipelineConfig& config, const std::string& path);

} // namespace seagrid
