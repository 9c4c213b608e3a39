#pragma once

#include "seagrid/ais.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace seagrid {

/// One sample of a trajectory: position in planar meters at time t,
/// with whatever optional measurements the source report carried.
struct TrajectoryPoint {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    std::optional<double> sog;
    std::optional<double> cog;
    std::optional<double> heading;
    std::optional<double> draught;
};

/// Temporally ordered point sequence of one ship. Always has at least
/// two points with strictly increasing timestamps.
struct Trajectory {
    std::uint64_t id = 0;
    std::uint32_t mmsi = 0;
    std::vector<TrajectoryPoint> points;
    bool infer_stopped = false;
    double duration = 0.0; ///< t_last - t_first, seconds.
    double length = 0.0;   ///< Sum of Euclidean segment lengths, meters.
    std::string destination; ///< Last non-empty reported destination.

    void recompute_measures();
};

struct TrajectoryParams {
    double gap_split_s = 300.0;        ///< Silence longer than this splits a trajectory.
    double stop_sog_kn = 0.5;          ///< Below this a sample counts as stopped.
    double stop_min_duration_s = 300.0; ///< Shorter lulls stay in the moving trajectory.
    double outlier_speed_kn = 100.0;   ///< Implied-speed bound for outlier removal.
    double simplify_epsilon_m = 10.0;
};

/// Greedy forward spatio-temporal outlier filter: a point whose implied
/// speed from the last retained point exceeds the bound is dropped.
/// Points must be time-ordered with strictly increasing t.
std::vector<TrajectoryPoint> remove_outliers(std::vector<TrajectoryPoint> points,
                                             double outlier_speed_kn);

/// Build stopped/moving trajectories per ship from cleaned records.
///
/// Records may arrive unordered; they are grouped by MMSI, sorted by
/// time (exact-duplicate timestamps per ship dropped), outlier-filtered,
/// split at silences longer than gap_split, and segmented into stopped
/// and moving runs. A maximal run of samples below stop_sog lasting at
/// least stop_min_duration becomes a stopped trajectory; shorter lulls
/// stay inside the moving trajectory. Single-point residues are
/// discarded. Different ships are independent, so the grouping may be
/// processed concurrently.
std::vector<Trajectory> build_trajectories(const std::vector<AisRecord>& records,
                                           const TrajectoryParams& params);

/// Synchronized Euclidean Distance between point p and the position
/// linearly interpolated at time p.t on the segment a->b.
double synchronized_distance(const TrajectoryPoint& p, const TrajectoryPoint& a,
                             const TrajectoryPoint& b);

/// Douglas-Peucker simplification under Synchronized Euclidean Distance.
///
/// First and last points are always retained, the output is a
/// subsequence of the input, and every removed point lies within
/// epsilon (SED) of the simplified trajectory at its own timestamp.
/// Equal maximum distances tie-break on the lowest index, which makes
/// the result deterministic, idempotent, and monotone in epsilon.
Trajectory simplify(const Trajectory& traj, double epsilon_m);

} // namespace seagrid
