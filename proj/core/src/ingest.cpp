#include "seagrid/ingest.hpp"

#include "seagrid/csv.hpp"

#include <charconv>
#include <cstdlib>
#include <istream>
#include <stdexcept>
#include <unordered_map>

namespace seagrid {

const char* to_string(RejectRule rule) {
    switch (rule) {
        case RejectRule::Parse: return "PARSE";
        case RejectRule::Range: return "RANGE";
        case RejectRule::Mmsi: return "MMSI";
        case RejectRule::Dimensions: return "DIMENSIONS";
        case RejectRule::Domain: return "DOMAIN";
        case RejectRule::OnLand: return "ON_LAND";
    }
    return "UNKNOWN";
}

namespace {

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    const auto result = std::from_chars(begin, end, out);
    return result.ec == std::errc{} && result.ptr == end;
}

bool parse_uint(const std::string& s, std::uint64_t& out) {
    if (s.empty()) return false;
    const auto result = std::from_chars(s.data(), s.data() + s.size(), out);
    return result.ec == std::errc{} && result.ptr == s.data() + s.size();
}

// Fixed-width unsigned field at s[pos..pos+len); advances pos on success.
bool take_digits(const std::string& s, std::size_t& pos, std::size_t len, unsigned& out) {
    if (pos + len > s.size()) return false;
    unsigned value = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const char c = s[pos + i];
        if (c < '0' || c > '9') return false;
        value = value * 10 + unsigned(c - '0');
    }
    pos += len;
    out = value;
    return true;
}

bool take_char(const std::string& s, std::size_t& pos, char expected) {
    if (pos >= s.size() || s[pos] != expected) return false;
    ++pos;
    return true;
}

// DD/MM/YYYY HH:MM:SS (DMA convention).
bool parse_dma_timestamp(const std::string& s, std::int64_t& out) {
    std::size_t pos = 0;
    unsigned day, month, year, hour, minute, second;
    if (!take_digits(s, pos, 2, day) || !take_char(s, pos, '/') || !take_digits(s, pos, 2, month) ||
        !take_char(s, pos, '/') || !take_digits(s, pos, 4, year) || !take_char(s, pos, ' ') ||
        !take_digits(s, pos, 2, hour) || !take_char(s, pos, ':') ||
        !take_digits(s, pos, 2, minute) || !take_char(s, pos, ':') ||
        !take_digits(s, pos, 2, second) || pos != s.size()) {
        return false;
    }
    try {
        out = civil_to_epoch(int(year), month, day, hour, minute, second);
    } catch (const std::invalid_argument&) {
        return false;
    }
    return true;
}

// YYYY-MM-DD[T ]HH:MM:SS with optional trailing Z.
bool parse_iso_timestamp(const std::string& s, std::int64_t& out) {
    std::size_t pos = 0;
    unsigned year, month, day, hour, minute, second;
    if (!take_digits(s, pos, 4, year) || !take_char(s, pos, '-') ||
        !take_digits(s, pos, 2, month) || !take_char(s, pos, '-') || !take_digits(s, pos, 2, day)) {
        return false;
    }
    if (pos >= s.size() || (s[pos] != 'T' && s[pos] != ' ')) return false;
    ++pos;
    if (!take_digits(s, pos, 2, hour) || !take_char(s, pos, ':') ||
        !take_digits(s, pos, 2, minute) || !take_char(s, pos, ':') ||
        !take_digits(s, pos, 2, second)) {
        return false;
    }
    if (pos < s.size() && s[pos] == 'Z') ++pos;
    if (pos != s.size()) return false;
    try {
        out = civil_to_epoch(int(year), month, day, hour, minute, second);
    } catch (const std::invalid_argument&) {
        return false;
    }
    return true;
}

bool parse_timestamp(const std::string& s, std::int64_t& out) {
    return parse_dma_timestamp(s, out) || parse_iso_timestamp(s, out);
}

std::optional<double> optional_number(const std::vector<std::string>& fields, int index) {
    if (index < 0 || std::size_t(index) >= fields.size()) return std::nullopt;
    double value;
    if (!parse_double(fields[std::size_t(index)], value)) return std::nullopt;
    return value;
}

std::optional<std::string> optional_text(const std::vector<std::string>& fields, int index) {
    if (index < 0 || std::size_t(index) >= fields.size()) return std::nullopt;
    const std::string& s = fields[std::size_t(index)];
    if (s.empty()) return std::nullopt;
    return s;
}

struct ColumnIndices {
    int timestamp = -1, mmsi = -1, latitude = -1, longitude = -1;
    int sog = -1, cog = -1, heading = -1, draught = -1;
    int nav_status = -1, ship_type = -1, destination = -1;
    int dim_bow = -1, dim_stern = -1, dim_port = -1, dim_starboard = -1;
};

ColumnIndices resolve_columns(const std::vector<std::string>& header, const ColumnMap& columns) {
    std::unordered_map<std::string, int> by_name;
    for (std::size_t i = 0; i < header.size(); ++i) by_name.emplace(header[i], int(i));

    const auto lookup = [&](const std::string& name) {
        const auto it = by_name.find(name);
        return it == by_name.end() ? -1 : it->second;
    };

    ColumnIndices idx;
    idx.timestamp = lookup(columns.timestamp);
    idx.mmsi = lookup(columns.mmsi);
    idx.latitude = lookup(columns.latitude);
    idx.longitude = lookup(columns.longitude);
    if (idx.timestamp < 0 || idx.mmsi < 0 || idx.latitude < 0 || idx.longitude < 0) {
        std::string missing;
        if (idx.timestamp < 0) missing += " '" + columns.timestamp + "'";
        if (idx.mmsi < 0) missing += " '" + columns.mmsi + "'";
        if (idx.latitude < 0) missing += " '" + columns.latitude + "'";
        if (idx.longitude < 0) missing += " '" + columns.longitude + "'";
        throw std::invalid_argument("missing mandatory column(s):" + missing);
    }
    idx.sog = lookup(columns.sog);
    idx.cog = lookup(columns.cog);
    idx.heading = lookup(columns.heading);
    idx.draught = lookup(columns.draught);
    idx.nav_status = lookup(columns.nav_status);
    idx.ship_type = lookup(columns.ship_type);
    idx.destination = lookup(columns.destination);
    idx.dim_bow = lookup(columns.dim_bow);
    idx.dim_stern = lookup(columns.dim_stern);
    idx.dim_port = lookup(columns.dim_port);
    idx.dim_starboard = lookup(columns.dim_starboard);
    return idx;
}

} // namespace

ParseResult parse_ais_csv(std::istream& in, const ColumnMap& columns) {
    std::string line;
    if (!read_line(in, line)) throw std::invalid_argument("empty input: no header row");
    const ColumnIndices idx = resolve_columns(split_csv_line(line), columns);

    ParseResult result;
    std::uint64_t line_no = 1;
    while (read_line(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        ++result.total_lines;

        const auto fields = split_csv_line(line);
        const auto field = [&](int i) -> const std::string& {
            static const std::string empty;
            return (i >= 0 && std::size_t(i) < fields.size()) ? fields[std::size_t(i)] : empty;
        };

        AisRecord rec;
        std::uint64_t mmsi = 0;
        if (!parse_timestamp(field(idx.timestamp), rec.t) || !parse_uint(field(idx.mmsi), mmsi) ||
            !parse_double(field(idx.latitude), rec.lat) ||
            !parse_double(field(idx.longitude), rec.lng) || mmsi > 0xffffffffull) {
            result.rejections.push_back({line_no, RejectRule::Parse, line});
            continue;
        }
        rec.mmsi = std::uint32_t(mmsi);
        rec.sog = optional_number(fields, idx.sog);
        rec.cog = optional_number(fields, idx.cog);
        rec.heading = optional_number(fields, idx.heading);
        rec.draught = optional_number(fields, idx.draught);
        rec.nav_status = optional_text(fields, idx.nav_status);
        rec.ship_type = optional_text(fields, idx.ship_type);
        rec.destination = optional_text(fields, idx.destination);
        rec.dim_bow = optional_number(fields, idx.dim_bow);
        rec.dim_stern = optional_number(fields, idx.dim_stern);
        rec.dim_port = optional_number(fields, idx.dim_port);
        rec.dim_starboard = optional_number(fields, idx.dim_starboard);

        result.rows.push_back({std::move(rec), line_no, line});
    }
    return result;
}

bool LandMask::contains(double x, double y) const {
    bool inside = false;
    for (const auto& ring : rings_) {
        const std::size_t n = ring.size();
        for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
            const auto [xi, yi] = ring[i];
            const auto [xj, yj] = ring[j];
            if ((yi > y) != (yj > y) && x < (xj - xi) * (y - yi) / (yj - yi) + xi) {
                inside = !inside;
            }
        }
    }
    return inside;
}

CleanResult project_rows(std::vector<IngestRow> rows, const Projection& proj) {
    CleanResult result;
    result.accepted.reserve(rows.size());
    for (auto& row : rows) {
        if (!Projection::in_valid_range(row.record.lat, row.record.lng)) {
            result.rejected.push_back({row.line, RejectRule::Range, row.raw});
            continue;
        }
        proj.forward(row.record.lat, row.record.lng, row.record.x, row.record.y);
        result.accepted.push_back(std::move(row));
    }
    return result;
}

namespace {

bool mmsi_valid(std::uint32_t mmsi) {
    if (mmsi < 100'000'000 || mmsi > 999'999'999) return false;
    // Repeated-digit sentinels: 111111111, 222222222, ..., 999999999.
    for (std::uint32_t d = 1; d <= 9; ++d) {
        if (mmsi == d * 111'111'111u) return false;
    }
    return true;
}

bool dimensions_valid(const AisRecord& rec, double max_length, double max_beam) {
    const auto pair_ok = [](const std::optional<double>& a, const std::optional<double>& b,
                            double bound) {
        if (!a && !b) return true;
        if ((a && *a < 0.0) || (b && *b < 0.0)) return false;
        const double total = a.value_or(0.0) + b.value_or(0.0);
        return total > 0.0 && total <= bound;
    };
    return pair_ok(rec.dim_bow, rec.dim_stern, max_length) &&
           pair_ok(rec.dim_port, rec.dim_starboard, max_beam);
}

} // namespace

std::optional<RejectRule> first_failing_rule(const AisRecord& rec, const CleaningConfig& rules) {
    if (rules.check_mmsi && !mmsi_valid(rec.mmsi)) return RejectRule::Mmsi;
    if (rules.check_dimensions && !dimensions_valid(rec, rules.max_length_m, rules.max_beam_m)) {
        return RejectRule::Dimensions;
    }
    if (rules.check_domain && !rules.domain.contains(rec.x, rec.y)) return RejectRule::Domain;
    if (rules.land && rules.land->contains(rec.x, rec.y)) return RejectRule::OnLand;
    return std::nullopt;
}

CleanResult clean(std::vector<IngestRow> rows, const CleaningConfig& rules) {
    CleanResult result;
    result.accepted.reserve(rows.size());
    for (auto& row : rows) {
        if (const auto rule = first_failing_rule(row.record, rules)) {
            result.rejected.push_back({row.line, *rule, row.raw});
        } else {
            result.accepted.push_back(std::move(row));
        }
    }
    return result;
}

} // namespace seagrid
