#include "seagrid/heatmap.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

namespace seagrid {

const std::vector<HeatmapType>& builtin_heatmap_types() {
    static const std::vector<HeatmapType> types{
        {1, "count", AggKind::Sum, Measure::Crossings, 1, "count of ships crossing a cell"},
        {2, "time", AggKind::Sum, Measure::Duration, 1, "accumulated time spent in a cell"},
        {3, "avg_delta_heading", AggKind::Avg, Measure::DeltaHeading, 2,
         "average delta change in heading in a cell"},
        {4, "avg_delta_cog", AggKind::Avg, Measure::DeltaCog, 2,
         "average delta change in COG in a cell"},
        {5, "min_draught", AggKind::Min, Measure::Draught, 1, "minimum draught in a cell"},
    };
    return types;
}

const HeatmapType* find_heatmap_type(const std::vector<HeatmapType>& types, int id) {
    for (const auto& t : types) {
        if (t.id == id) return &t;
    }
    return nullptr;
}

const HeatmapType* find_heatmap_type(const std::vector<HeatmapType>& types,
                                     const std::string& name) {
    for (const auto& t : types) {
        if (t.name == name) return &t;
    }
    return nullptr;
}

bool HeatmapTile::has_data(int i, int j) const {
    const std::size_t idx = std::size_t(j) * size + i;
    return band1.empty() ? !std::isnan(band0[idx]) : band1[idx] > 0.0;
}

bool Raster::has_data(int i, int j) const {
    return band1.empty() ? !std::isnan(band0[index(i, j)]) : band1[index(i, j)] > 0.0;
}

namespace {

std::optional<double> measure_value(const CellEvent& ev, Measure measure) {
    switch (measure) {
        case Measure::Crossings: return 1.0;
        case Measure::Duration: return ev.duration;
        case Measure::DeltaHeading: return ev.delta_heading;
        case Measure::DeltaCog: return ev.delta_cog;
        case Measure::Draught: return ev.min_draught;
    }
    return std::nullopt;
}

void accumulate(std::vector<double>& band0, std::vector<double>& band1, std::size_t idx,
                double value, AggKind kind) {
    switch (kind) {
        case AggKind::Sum:
            band0[idx] = std::isnan(band0[idx]) ? value : band0[idx] + value;
            break;
        case AggKind::Min:
            band0[idx] = std::isnan(band0[idx]) ? value : std::min(band0[idx], value);
            break;
        case AggKind::Avg:
            band0[idx] += value;
            band1[idx] += 1.0;
            break;
    }
}

} // namespace

std::vector<HeatmapTile> rollup_heatmaps(const std::vector<CellEvent>& events,
                                         const std::vector<HeatmapType>& types, int resolution,
                                         const GridDomain& domain) {
    if (!is_granularity(resolution)) throw std::invalid_argument("unknown tile resolution");
    const int size = kBaseGranularity / resolution;
    const std::size_t pixels = std::size_t(size) * size;

    using Key = std::tuple<int, std::uint32_t, std::int64_t, std::int64_t>;
    std::map<Key, HeatmapTile> tiles;

    for (const CellEvent& ev : events) {
        if (ev.cell.granularity != resolution) {
            throw std::invalid_argument("event granularity does not match tile resolution");
        }
        const CellKey anchor = ancestor(ev.cell, kBaseGranularity);
        const int i = int(ev.cell.col - anchor.col * size);
        const int j = int(ev.cell.row - anchor.row * size);
        const std::size_t idx = std::size_t(j) * size + i;

        for (const HeatmapType& type : types) {
            const auto value = measure_value(ev, type.measure);
            if (!value) continue;
            auto [it, inserted] =
                tiles.try_emplace(Key{type.id, ev.date_id, anchor.row, anchor.col});
            HeatmapTile& tile = it->second;
            if (inserted) {
                tile.anchor = anchor;
                tile.type_id = type.id;
                tile.resolution = resolution;
                tile.date_id = ev.date_id;
                tile.size = size;
                if (type.kind == AggKind::Avg) {
                    tile.band0.assign(pixels, 0.0);
                    tile.band1.assign(pixels, 0.0);
                } else {
                    tile.band0.assign(pixels, std::nan(""));
                }
            }
            accumulate(tile.band0, tile.band1, idx, *value, type.kind);
        }
    }

    std::vector<HeatmapTile> out;
    out.reserve(tiles.size());
    for (auto& [key, tile] : tiles) out.push_back(std::move(tile));
    std::sort(out.begin(), out.end(), [](const HeatmapTile& a, const HeatmapTile& b) {
        return std::tie(a.type_id, a.resolution, a.date_id, a.anchor.row, a.anchor.col) <
               std::tie(b.type_id, b.resolution, b.date_id, b.anchor.row, b.anchor.col);
    });
    return out;
}

Raster finalize(const Raster& two_band) {
    if (two_band.band1.empty()) throw std::invalid_argument("finalize needs a two-band raster");
    Raster out = two_band;
    for (std::size_t idx = 0; idx < out.band0.size(); ++idx) {
        out.band0[idx] = two_band.band1[idx] > 0.0 ? two_band.band0[idx] / two_band.band1[idx]
                                                   : std::nan("");
    }
    out.band1.clear();
    return out;
}

HeatmapTile finalize(const HeatmapTile& two_band) {
    if (two_band.band1.empty()) throw std::invalid_argument("finalize needs a two-band tile");
    HeatmapTile out = two_band;
    for (std::size_t idx = 0; idx < out.band0.size(); ++idx) {
        out.band0[idx] = two_band.band1[idx] > 0.0 ? two_band.band0[idx] / two_band.band1[idx]
                                                   : std::nan("");
    }
    out.band1.clear();
    return out;
}

std::vector<StoredTile> place_tiles(std::vector<HeatmapTile> tiles, const DivisionIndex& index,
                                    const GridDomain& domain) {
    std::vector<StoredTile> out;
    out.reserve(tiles.size());
    for (auto& tile : tiles) {
        const int division = index.division_of(tile.anchor, domain);
        out.push_back({division, std::move(tile)});
    }
    std::sort(out.begin(), out.end(), [](const StoredTile& a, const StoredTile& b) {
        return std::tie(a.division_id, a.tile.type_id, a.tile.resolution, a.tile.date_id,
                        a.tile.anchor.row, a.tile.anchor.col) <
               std::tie(b.division_id, b.tile.type_id, b.tile.resolution, b.tile.date_id,
                        b.tile.anchor.row, b.tile.anchor.col);
    });
    return out;
}

Raster make_query_window(const Rect& area, int resolution, const GridDomain& domain, int bands) {
    const Rect clipped = area.intersection(domain.rect());
    if (!clipped.valid()) throw std::domain_error("query area does not intersect the domain");
    const double res = resolution;
    const auto col_lo = std::int64_t(std::floor((clipped.x_min - domain.rect().x_min) / res));
    const auto col_hi = std::int64_t(std::ceil((clipped.x_max - domain.rect().x_min) / res));
    const auto row_lo = std::int64_t(std::floor((clipped.y_min - domain.rect().y_min) / res));
    const auto row_hi = std::int64_t(std::ceil((clipped.y_max - domain.rect().y_min) / res));

    Raster raster;
    raster.resolution = resolution;
    raster.origin_x = domain.rect().x_min + double(col_lo) * res;
    raster.origin_y = domain.rect().y_min + double(row_lo) * res;
    raster.width = int(col_hi - col_lo);
    raster.height = int(row_hi - row_lo);
    const std::size_t pixels = std::size_t(raster.width) * raster.height;
    if (bands == 2) {
        raster.band0.assign(pixels, 0.0);
        raster.band1.assign(pixels, 0.0);
    } else {
        raster.band0.assign(pixels, std::nan(""));
    }
    return raster;
}

void aggregate_tile(Raster& out, const HeatmapTile& tile, AggKind kind, const GridDomain& domain) {
    const Rect tile_rect = domain.cell_rect(tile.anchor);
    const double res = out.resolution;
    const auto off_i = std::int64_t(std::llround((tile_rect.x_min - out.origin_x) / res));
    const auto off_j = std::int64_t(std::llround((tile_rect.y_min - out.origin_y) / res));

    for (int j = 0; j < tile.size; ++j) {
        const std::int64_t oj = off_j + j;
        if (oj < 0 || oj >= out.height) continue;
        for (int i = 0; i < tile.size; ++i) {
            const std::int64_t oi = off_i + i;
            if (oi < 0 || oi >= out.width) continue;
            if (!tile.has_data(i, j)) continue;
            const std::size_t src = std::size_t(j) * tile.size + i;
            const std::size_t dst = out.index(int(oi), int(oj));
            if (kind == AggKind::Avg) {
                out.band0[dst] += tile.band0[src];
                out.band1[dst] += tile.band1[src];
            } else {
                accumulate(out.band0, out.band1, dst, tile.band0[src], kind);
            }
        }
    }
}

Raster query_heatmap(const std::vector<StoredTile>& store, const std::vector<HeatmapType>& types,
                     const HeatmapQuery& query, const GridDomain& domain,
                     const DivisionIndex& divisions) {
    const HeatmapType* type = find_heatmap_type(types, query.type_id);
    if (!type) throw std::invalid_argument("unknown heatmap type id");
    if (!is_granularity(query.resolution)) throw std::invalid_argument("unknown resolution");
    if (query.date_from > query.date_to) throw std::invalid_argument("empty date range");

    Raster out = make_query_window(query.area, query.resolution, domain, type->bands);

    // Canonical ascending (anchor, date) order; with one tile per
    // (anchor, date) every output pixel sees its contributions in date
    // order regardless of the grouping, so both phases and a
    // single-phase aggregation produce bit-identical sums.
    std::vector<const StoredTile*> matched;
    for (const StoredTile& st : store) {
        const HeatmapTile& tile = st.tile;
        if (tile.type_id != query.type_id || tile.resolution != query.resolution) continue;
        if (tile.date_id < query.date_from || tile.date_id > query.date_to) continue;
        if (!domain.cell_rect(tile.anchor).intersects(query.area)) continue;
        if (divisions.division_of(tile.anchor, domain) != st.division_id) {
            throw std::logic_error("tile stored under a division that does not own its anchor");
        }
        matched.push_back(&st);
    }
    std::sort(matched.begin(), matched.end(), [](const StoredTile* a, const StoredTile* b) {
        return std::tie(a->tile.anchor.row, a->tile.anchor.col, a->tile.date_id) <
               std::tie(b->tile.anchor.row, b->tile.anchor.col, b->tile.date_id);
    });

    // Phase 1: division-local aggregation. Each division aggregates its
    // own tiles into a raster covering its share of the query window.
    std::map<int, std::vector<const StoredTile*>> by_division;
    for (const StoredTile* st : matched) by_division[st->division_id].push_back(st);

    std::vector<Raster> partials;
    partials.reserve(by_division.size());
    for (const auto& [division_id, tiles] : by_division) {
        (void)division_id;
        Rect bounds = domain.cell_rect(tiles.front()->tile.anchor);
        for (const StoredTile* st : tiles) {
            const Rect r = domain.cell_rect(st->tile.anchor);
            bounds.x_min = std::min(bounds.x_min, r.x_min);
            bounds.y_min = std::min(bounds.y_min, r.y_min);
            bounds.x_max = std::max(bounds.x_max, r.x_max);
            bounds.y_max = std::max(bounds.y_max, r.y_max);
        }
        Raster partial = make_query_window(bounds.intersection(query.area), query.resolution,
                                           domain, type->bands);
        for (const StoredTile* st : tiles) {
            aggregate_tile(partial, st->tile, type->kind, domain);
        }
        partials.push_back(std::move(partial));
    }

    // Phase 2: mosaic. Divisions are interior-disjoint and anchors
    // belong to exactly one division, so this is a plain scatter.
    for (const Raster& partial : partials) {
        const auto off_i = std::int64_t(std::llround((partial.origin_x - out.origin_x) /
                                                     double(out.resolution)));
        const auto off_j = std::int64_t(std::llround((partial.origin_y - out.origin_y) /
                                                     double(out.resolution)));
        for (int j = 0; j < partial.height; ++j) {
            const std::int64_t oj = off_j + j;
            if (oj < 0 || oj >= out.height) continue;
            for (int i = 0; i < partial.width; ++i) {
                const std::int64_t oi = off_i + i;
                if (oi < 0 || oi >= out.width) continue;
                if (!partial.has_data(i, j)) continue;
                const std::size_t src = partial.index(i, j);
                const std::size_t dst = out.index(int(oi), int(oj));
                out.band0[dst] = partial.band0[src];
                if (!out.band1.empty()) out.band1[dst] = partial.band1[src];
            }
        }
    }
    return out;
}

} // namespace seagrid
