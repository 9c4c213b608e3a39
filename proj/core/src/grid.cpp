#include "seagrid/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace seagrid {

bool is_granularity(int g) {
    return std::find(kGranularities.begin(), kGranularities.end(), g) != kGranularities.end();
}

CellKey parent(const CellKey& cell) {
    switch (cell.granularity) {
        case 50: return {200, cell.col / 4, cell.row / 4};
        case 200: return {1000, cell.col / 5, cell.row / 5};
        case 1000: return {5000, cell.col / 5, cell.row / 5};
        default: throw std::domain_error("5000 m cells have no parent");
    }
}

CellKey ancestor(const CellKey& cell, int g) {
    if (!is_granularity(g) || g < cell.granularity) {
        throw std::domain_error("ancestor granularity must be coarser");
    }
    CellKey current = cell;
    while (current.granularity < g) current = parent(current);
    return current;
}

GridDomain::GridDomain(Rect rect) : rect_(rect) {
    if (!rect.valid()) throw std::invalid_argument("domain rectangle is empty");
}

CellKey GridDomain::cell_of(double x, double y, int granularity) const {
    if (!is_granularity(granularity)) throw std::invalid_argument("unknown granularity");
    if (!rect_.contains(x, y)) throw std::domain_error("point outside the spatial domain");
    const double g = granularity;
    return {granularity, std::int64_t(std::floor((x - rect_.x_min) / g)),
            std::int64_t(std::floor((y - rect_.y_min) / g))};
}

Rect GridDomain::cell_rect(const CellKey& cell) const {
    const double g = cell.granularity;
    return Rect{rect_.x_min + double(cell.col) * g, rect_.y_min + double(cell.row) * g,
                rect_.x_min + double(cell.col + 1) * g, rect_.y_min + double(cell.row + 1) * g};
}

namespace {

struct Sample {
    double t;
    double value;
};

// Time-weighted mean of a piecewise-linear signal over [a, b], with
// constant extension beyond the first/last sample. Empty -> NaN.
double mean_linear(const std::vector<Sample>& samples, double a, double b) {
    if (samples.empty() || b <= a) return std::nan("");
    double integral = 0.0;

    const auto trapezoid = [&](double t0, double v0, double t1, double v1) {
        // Clip segment [t0, t1] to [a, b] and accumulate its area.
        const double lo = std::max(t0, a);
        const double hi = std::min(t1, b);
        if (hi <= lo) return;
        const double dv = (v1 - v0) / (t1 - t0);
        const double vlo = v0 + dv * (lo - t0);
        const double vhi = v0 + dv * (hi - t0);
        integral += 0.5 * (vlo + vhi) * (hi - lo);
    };

    if (a < samples.front().t) {
        integral += samples.front().value * (std::min(b, samples.front().t) - a);
    }
    for (std::size_t i = 1; i < samples.size(); ++i) {
        trapezoid(samples[i - 1].t, samples[i - 1].value, samples[i].t, samples[i].value);
    }
    if (b > samples.back().t) {
        integral += samples.back().value * (b - std::max(a, samples.back().t));
    }
    return integral / (b - a);
}

// Sum of |wrapped| successive differences between samples inside [a, b].
double path_delta(const std::vector<Sample>& samples, double a, double b) {
    double sum = 0.0;
    bool have_prev = false;
    double prev = 0.0;
    for (const Sample& s : samples) {
        if (s.t < a || s.t > b) continue;
        if (have_prev) sum += std::fabs(wrap_degrees(s.value - prev));
        prev = s.value;
        have_prev = true;
    }
    return sum;
}

std::optional<double> min_in_range(const std::vector<Sample>& samples, double a, double b) {
    std::optional<double> result;
    for (const Sample& s : samples) {
        if (s.t < a || s.t > b) continue;
        if (!result || s.value < *result) result = s.value;
    }
    return result;
}

// Crossing times of a segment against the interior lattice lines of one
// axis. Endpoint touches are handled by the vertex breakpoints.
void axis_crossings(double p, double q, double tp, double tq, double origin, double g,
                    std::vector<double>& out) {
    const double lo = std::min(p, q);
    const double hi = std::max(p, q);
    const std::int64_t k_lo = std::int64_t(std::ceil((lo - origin) / g));
    const std::int64_t k_hi = std::int64_t(std::floor((hi - origin) / g));
    for (std::int64_t k = k_lo; k <= k_hi; ++k) {
        const double line = origin + double(k) * g;
        if (line > lo && line < hi) {
            const double t = tp + (line - p) / (q - p) * (tq - tp);
            out.push_back(std::clamp(t, tp, tq));
        }
    }
}

} // namespace

std::vector<CellEvent> rollup_cells(const Trajectory& traj, const GridDomain& domain,
                                    int granularity) {
    const auto& pts = traj.points;
    if (pts.size() < 2) return {};
    const double g = granularity;
    const double t0 = pts.front().t;
    const double t1 = pts.back().t;

    // Breakpoints: vertex times, lattice crossings, day boundaries.
    std::vector<double> breaks;
    breaks.reserve(pts.size() * 2);
    for (const auto& p : pts) breaks.push_back(p.t);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const auto& a = pts[i - 1];
        const auto& b = pts[i];
        axis_crossings(a.x, b.x, a.t, b.t, domain.rect().x_min, g, breaks);
        axis_crossings(a.y, b.y, a.t, b.t, domain.rect().y_min, g, breaks);
    }
    for (std::int64_t day = day_index(t0) + 1; day <= day_index(t1); ++day) {
        breaks.push_back(double(day) * double(kSecondsPerDay));
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    // Interpolated crossing times can land epsilon outside [t0, t1].
    breaks.erase(std::remove_if(breaks.begin(), breaks.end(),
                                [&](double t) { return t < t0 || t > t1; }),
                 breaks.end());

    // Pre-extract measure samples once.
    std::vector<Sample> sog, cog, heading, draught;
    for (const auto& p : pts) {
        if (p.sog) sog.push_back({p.t, *p.sog});
        if (p.cog) cog.push_back({p.t, *p.cog});
        if (p.heading) heading.push_back({p.t, *p.heading});
        if (p.draught) draught.push_back({p.t, *p.draught});
    }

    // Walk the breakpoint intervals, assigning each to the cell at its
    // midpoint and merging consecutive intervals with the same cell and
    // date. `seg` tracks the segment containing the current midpoint.
    std::vector<CellEvent> events;
    std::size_t seg = 0;
    std::optional<CellKey> open_cell;
    double open_enter = t0;
    std::uint32_t open_date = 0;

    const auto close_event = [&](double t_exit) {
        CellEvent ev;
        ev.cell = *open_cell;
        ev.trajectory_id = traj.id;
        ev.mmsi = traj.mmsi;
        ev.t_enter = open_enter;
        ev.t_exit = t_exit;
        ev.duration = t_exit - open_enter;
        const double mean = mean_linear(sog, open_enter, t_exit);
        if (!std::isnan(mean)) ev.avg_sog = mean;
        ev.delta_cog = path_delta(cog, open_enter, t_exit);
        ev.delta_heading = path_delta(heading, open_enter, t_exit);
        ev.min_draught = min_in_range(draught, open_enter, t_exit);
        ev.date_id = open_date;
        ev.infer_stopped = traj.infer_stopped;
        events.push_back(std::move(ev));
    };

    for (std::size_t i = 1; i < breaks.size(); ++i) {
        const double a = breaks[i - 1];
        const double b = breaks[i];
        if (b <= a) continue;
        const double mid = 0.5 * (a + b);
        while (seg + 2 < pts.size() && pts[seg + 1].t <= mid) ++seg;
        const auto& pa = pts[seg];
        const auto& pb = pts[seg + 1];
        const double r = (mid - pa.t) / (pb.t - pa.t);
        const double x = pa.x + r * (pb.x - pa.x);
        const double y = pa.y + r * (pb.y - pa.y);
        const CellKey cell = domain.cell_of(x, y, granularity);
        const std::uint32_t date = date_id_of(a);

        if (open_cell && (!(cell == *open_cell) || date != open_date)) {
            close_event(a);
            open_cell.reset();
        }
        if (!open_cell) {
            open_cell = cell;
            open_enter = a;
            open_date = date;
        }
    }
    if (open_cell) close_event(t1);
    return events;
}

} // namespace seagrid
