#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <string>

namespace seagrid {

/// One knot in meters per second (1852 m per hour).
inline constexpr double kKnotMps = 1852.0 / 3600.0;

/// Mean earth radius used by the equirectangular projection, meters.
inline constexpr double kEarthRadiusM = 6'371'000.0;

/// Seconds per civil day.
inline constexpr std::int64_t kSecondsPerDay = 86'400;

/// Axis-aligned rectangle in planar meters. Half-open on the upper
/// edges: a point on x_max or y_max is outside.
struct Rect {
    double x_min = 0.0;
    double y_min = 0.0;
    double x_max = 0.0;
    double y_max = 0.0;

    double width() const { return x_max - x_min; }
    double height() const { return y_max - y_min; }
    double area() const { return width() * height(); }

    bool valid() const { return x_max > x_min && y_max > y_min; }

    bool contains(double x, double y) const {
        return x >= x_min && x < x_max && y >= y_min && y < y_max;
    }

    /// True when the open interiors overlap (touching edges do not count).
    bool intersects(const Rect& o) const {
        return x_min < o.x_max && o.x_min < x_max && y_min < o.y_max && o.y_min < y_max;
    }

    Rect intersection(const Rect& o) const {
        return Rect{std::fmax(x_min, o.x_min), std::fmax(y_min, o.y_min),
                    std::fmin(x_max, o.x_max), std::fmin(y_max, o.y_max)};
    }
};

inline bool operator==(const Rect& a, const Rect& b) {
    return a.x_min == b.x_min && a.y_min == b.y_min && a.x_max == b.x_max && a.y_max == b.y_max;
}

/// Wrap an angular difference in degrees onto [-180, 180).
inline double wrap_degrees(double d) {
    d = std::fmod(d + 180.0, 360.0);
    if (d < 0.0) d += 360.0;
    return d - 180.0;
}

/// Day index (days since the Unix epoch) of a timestamp in seconds.
/// Fractional seconds are allowed; negative times round toward -inf.
inline std::int64_t day_index(double t_seconds) {
    return static_cast<std::int64_t>(std::floor(t_seconds / static_cast<double>(kSecondsPerDay)));
}

/// YYYYMMDD integer for a UTC timestamp in seconds since the epoch.
inline std::uint32_t date_id_of(double t_seconds) {
    using namespace std::chrono;
    const year_month_day ymd{sys_days{days{day_index(t_seconds)}}};
    return static_cast<std::uint32_t>(int(ymd.year()) * 10000 + unsigned(ymd.month()) * 100 +
                                      unsigned(ymd.day()));
}

/// Seconds since the epoch at 00:00:00 UTC of a YYYYMMDD date id.
/// Throws std::invalid_argument for an impossible date.
std::int64_t day_start_of(std::uint32_t date_id);

/// Convert a civil UTC date-time to seconds since the epoch.
std::int64_t civil_to_epoch(int year, unsigned month, unsigned day, unsigned hour, unsigned minute,
                            unsigned second);

} // namespace seagrid
