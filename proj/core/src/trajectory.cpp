#include "seagrid/trajectory.hpp"

#include "seagrid/common.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

namespace seagrid {

namespace {

double segment_length(const TrajectoryPoint& a, const TrajectoryPoint& b) {
    return std::hypot(b.x - a.x, b.y - a.y);
}

// Implied speed between two samples, knots. dt must be positive.
double implied_speed_kn(const TrajectoryPoint& a, const TrajectoryPoint& b) {
    return segment_length(a, b) / (b.t - a.t) / kKnotMps;
}

} // namespace

void Trajectory::recompute_measures() {
    duration = points.empty() ? 0.0 : points.back().t - points.front().t;
    length = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i) {
        length += segment_length(points[i - 1], points[i]);
    }
}

std::vector<TrajectoryPoint> remove_outliers(std::vector<TrajectoryPoint> points,
                                             double outlier_speed_kn) {
    if (points.size() < 2) return points;
    std::vector<TrajectoryPoint> kept;
    kept.reserve(points.size());
    kept.push_back(points.front());
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (implied_speed_kn(kept.back(), points[i]) <= outlier_speed_kn) {
            kept.push_back(points[i]);
        }
    }
    return kept;
}

namespace {

// Speed assigned to each sample for stop detection: reported SOG when
// present, otherwise the implied speed from the previous point (the
// first point borrows the speed to its successor).
std::vector<double> sample_speeds_kn(const std::vector<TrajectoryPoint>& pts) {
    std::vector<double> speeds(pts.size(), 0.0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].sog) {
            speeds[i] = *pts[i].sog;
        } else if (i > 0) {
            speeds[i] = implied_speed_kn(pts[i - 1], pts[i]);
        } else if (pts.size() > 1) {
            speeds[i] = implied_speed_kn(pts[0], pts[1]);
        }
    }
    return speeds;
}

struct ShipRow {
    TrajectoryPoint point;
    std::optional<std::string> destination;
};

// Split a gap-free run into stopped and moving trajectories. A maximal
// stopped-sample run lasting at least stop_min_duration becomes its own
// stopped trajectory; everything else stays moving.
void segment_run(const std::vector<ShipRow>& run, const TrajectoryParams& params,
                 std::vector<std::pair<std::vector<ShipRow>, bool>>& out) {
    std::vector<TrajectoryPoint> pts;
    pts.reserve(run.size());
    for (const auto& r : run) pts.push_back(r.point);
    const std::vector<double> speeds = sample_speeds_kn(pts);

    std::vector<std::pair<std::size_t, std::size_t>> stops; // [first, last] inclusive
    std::size_t i = 0;
    while (i < pts.size()) {
        if (speeds[i] < params.stop_sog_kn) {
            std::size_t j = i;
            while (j + 1 < pts.size() && speeds[j + 1] < params.stop_sog_kn) ++j;
            if (pts[j].t - pts[i].t >= params.stop_min_duration_s) stops.emplace_back(i, j);
            i = j + 1;
        } else {
            ++i;
        }
    }

    std::size_t cursor = 0;
    const auto emit = [&](std::size_t first, std::size_t last, bool stopped) {
        if (last <= first) return; // single-point residue
        out.emplace_back(std::vector<ShipRow>(run.begin() + long(first), run.begin() + long(last) + 1),
                         stopped);
    };
    for (const auto& [first, last] : stops) {
        if (first > cursor) emit(cursor, first - 1, false);
        emit(first, last, true);
        cursor = last + 1;
    }
    if (cursor < run.size()) emit(cursor, run.size() - 1, false);
}

} // namespace

std::vector<Trajectory> build_trajectories(const std::vector<AisRecord>& records,
                                           const TrajectoryParams& params) {
    // Group by ship; std::map keeps the output ordering deterministic.
    std::map<std::uint32_t, std::vector<ShipRow>> ships;
    for (const AisRecord& rec : records) {
        ships[rec.mmsi].push_back(
            {{double(rec.t), rec.x, rec.y, rec.sog, rec.cog, rec.heading, rec.draught},
             rec.destination});
    }

    std::vector<Trajectory> trajectories;
    std::uint64_t next_id = 1;

    for (auto& [mmsi, rows] : ships) {
        std::stable_sort(rows.begin(), rows.end(),
                         [](const ShipRow& a, const ShipRow& b) { return a.point.t < b.point.t; });

        // Drop exact-duplicate timestamps, keeping the first report.
        std::vector<ShipRow> unique_rows;
        unique_rows.reserve(rows.size());
        for (auto& row : rows) {
            if (unique_rows.empty() || row.point.t > unique_rows.back().point.t) {
                unique_rows.push_back(std::move(row));
            }
        }

        // Outlier filter, tracking surviving rows by index.
        std::vector<ShipRow> filtered;
        filtered.reserve(unique_rows.size());
        if (!unique_rows.empty()) {
            filtered.push_back(unique_rows.front());
            for (std::size_t i = 1; i < unique_rows.size(); ++i) {
                if (implied_speed_kn(filtered.back().point, unique_rows[i].point) <=
                    params.outlier_speed_kn) {
                    filtered.push_back(unique_rows[i]);
                }
            }
        }

        // Split at silences, then segment each run into stopped/moving.
        std::vector<std::pair<std::vector<ShipRow>, bool>> pieces;
        std::size_t start = 0;
        for (std::size_t i = 1; i <= filtered.size(); ++i) {
            const bool gap = i == filtered.size() ||
                             filtered[i].point.t - filtered[i - 1].point.t > params.gap_split_s;
            if (!gap) continue;
            if (i - start >= 2) {
                segment_run({filtered.begin() + long(start), filtered.begin() + long(i)}, params,
                            pieces);
            }
            start = i;
        }

        for (auto& [piece, stopped] : pieces) {
            Trajectory traj;
            traj.id = next_id++;
            traj.mmsi = mmsi;
            traj.infer_stopped = stopped;
            for (auto& row : piece) {
                traj.points.push_back(row.point);
                if (row.destination && !row.destination->empty()) {
                    traj.destination = *row.destination;
                }
            }
            traj.recompute_measures();
            trajectories.push_back(std::move(traj));
        }
    }
    return trajectories;
}

double synchronized_distance(const TrajectoryPoint& p, const TrajectoryPoint& a,
                             const TrajectoryPoint& b) {
    if (b.t == a.t) return std::hypot(p.x - a.x, p.y - a.y);
    const double r = (p.t - a.t) / (b.t - a.t);
    const double qx = a.x + r * (b.x - a.x);
    const double qy = a.y + r * (b.y - a.y);
    return std::hypot(p.x - qx, p.y - qy);
}

Trajectory simplify(const Trajectory& traj, double epsilon_m) {
    const auto& pts = traj.points;
    Trajectory out = traj;
    if (pts.size() <= 2) return out;

    std::vector<char> keep(pts.size(), 0);
    keep.front() = keep.back() = 1;

    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, pts.size() - 1}};
    while (!stack.empty()) {
        const auto [lo, hi] = stack.back();
        stack.pop_back();
        if (hi - lo < 2) continue;

        // Strictly-greater comparison keeps the lowest index on ties.
        double max_dist = -1.0;
        std::size_t split = lo;
        for (std::size_t i = lo + 1; i < hi; ++i) {
            const double d = synchronized_distance(pts[i], pts[lo], pts[hi]);
            if (d > max_dist) {
                max_dist = d;
                split = i;
            }
        }
        if (max_dist > epsilon_m) {
            keep[split] = 1;
            stack.emplace_back(lo, split);
            stack.emplace_back(split, hi);
        }
    }

    out.points.clear();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (keep[i]) out.points.push_back(pts[i]);
    }
    out.recompute_measures();
    return out;
}

} // namespace seagrid
