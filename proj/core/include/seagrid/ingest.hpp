#pragma once

#include "seagrid/ais.hpp"
#include "seagrid/common.hpp"
#include "seagrid/projection.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace seagrid {

/// Maps AIS record fields to CSV column names. Defaults follow the DMA
/// export convention; every name can be remapped for other AIS sources.
struct ColumnMap {
    std::string timestamp = "# Timestamp";
    std::string mmsi = "MMSI";
    std::string latitude = "Latitude";
    std::string longitude = "Longitude";
    std::string sog = "SOG";
    std::string cog = "COG";
    std::string heading = "Heading";
    std::string draught = "Draught";
    std::string nav_status = "Navigational status";
    std::string ship_type = "Ship type";
    std::string destination = "Destination";
    std::string dim_bow = "A";
    std::string dim_stern = "B";
    std::string dim_port = "C";
    std::string dim_starboard = "D";
};

/// A parsed record together with its source position, kept until
/// cleaning so rejections can quote the original line.
struct IngestRow {
    AisRecord record;
    std::uint64_t line = 0;
    std::string raw;
};

struct ParseResult {
    std::vector<IngestRow> rows;
    std::vector<RejectionRecord> rejections;
    std::uint64_t total_lines = 0; ///< Data lines seen (header excluded).
};

/// Parse a CSV stream with a header row into typed records.
///
/// Timestamps accept `DD/MM/YYYY HH:MM:SS` (DMA convention) with ISO-8601
/// as a fallback. Unparsable optional fields are left absent; a row with a
/// broken mandatory field becomes one PARSE rejection. Output preserves
/// input order. Throws std::invalid_argument when a mandatory column
/// (timestamp, mmsi, latitude, longitude) is missing from the header.
ParseResult parse_ais_csv(std::istream& in, const ColumnMap& columns);

/// Polygon set in projected meters used by the on-land rule.
class LandMask {
public:
    explicit LandMask(std::vector<std::vector<std::pair<double, double>>> rings)
        : rings_(std::move(rings)) {}

    /// Even-odd (ray casting) point-in-polygon test across all rings.
    bool contains(double x, double y) const;

    const std::vector<std::vector<std::pair<double, double>>>& rings() const { return rings_; }

private:
    std::vector<std::vector<std::pair<double, double>>> rings_;
};

struct CleaningConfig {
    bool check_mmsi = true;
    bool check_dimensions = true;
    bool check_domain = true;
    double max_length_m = 500.0; ///< Bound on dim_bow + dim_stern.
    double max_beam_m = 80.0;    ///< Bound on dim_port + dim_starboard.
    Rect domain;                 ///< Spatial domain rectangle, meters.
    std::optional<LandMask> land; ///< On-land rule disabled when absent.
};

struct CleanResult {
    std::vector<IngestRow> accepted;
    std::vector<RejectionRecord> rejected;
};

/// Fill x/y on every row; rows whose lat/lng are outside the valid
/// ranges become RANGE rejections and are removed.
CleanResult project_rows(std::vector<IngestRow> rows, const Projection& proj);

/// Apply the per-record cleaning rules. Each rejected row carries the
/// first failing rule id; rule order is MMSI, DIMENSIONS, DOMAIN, ON_LAND.
/// Pure per record, so chunked parallel runs merge without coordination.
CleanResult clean(std::vector<IngestRow> rows, const CleaningConfig& rules);

/// First failing rule for a single projected record, or nullopt when the
/// record passes. This is the predicate `clean` applies row by row.
std::optional<RejectRule> first_failing_rule(const AisRecord& rec, const CleaningConfig& rules);

} // namespace seagrid
