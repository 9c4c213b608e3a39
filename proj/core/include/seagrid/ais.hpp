#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace seagrid {

/// One decoded AIS position report. `x`/`y` are planar meters and are
/// filled by the projection step; until then they are zero.
struct AisRecord {
    std::int64_t t = 0; ///< UTC timestamp, whole seconds since the epoch.
    double lng = 0.0;   ///< Longitude, degrees WGS84.
    double lat = 0.0;   ///< Latitude, degrees WGS84.
    double x = 0.0;     ///< Projected easting, meters.
    double y = 0.0;     ///< Projected northing, meters.
    std::uint32_t mmsi = 0;

    std::optional<double> sog;     ///< Speed over ground, knots.
    std::optional<double> cog;     ///< Course over ground, degrees [0, 360).
    std::optional<double> heading; ///< True heading, degrees [0, 360).
    std::optional<double> draught; ///< Meters.
    std::optional<std::string> nav_status;
    std::optional<std::string> ship_type;
    std::optional<std::string> destination;
    std::optional<double> dim_bow;
    std::optional<double> dim_stern;
    std::optional<double> dim_port;
    std::optional<double> dim_starboard;
};

/// Why a source row was dropped.
enum class RejectRule : std::uint8_t {
    Parse,      ///< Row could not be decoded at all.
    Range,      ///< lat/lng outside the valid coordinate ranges.
    Mmsi,       ///< Not a 9-digit identifier, or a known invalid sentinel.
    Dimensions, ///< Reported hull dimensions are unnatural.
    Domain,     ///< Projected position falls outside the configured domain.
    OnLand,     ///< Position inside a configured land polygon.
};

const char* to_string(RejectRule rule);

/// Audit-trail entry for one dropped source row.
struct RejectionRecord {
    std::uint64_t line = 0; ///< 1-based line number in the source file.
    RejectRule rule = RejectRule::Parse;
    std::string raw; ///< The source line, verbatim.
};

} // namespace seagrid
