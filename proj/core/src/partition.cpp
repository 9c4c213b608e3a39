#include "seagrid/partition.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace seagrid {

std::uint64_t CountGrid::total() const {
    std::uint64_t sum = 0;
    for (const auto c : counts) sum += c;
    return sum;
}

CountGrid count_grid_from_events(const std::vector<CellEvent>& events_5000, const Rect& domain) {
    CountGrid grid;
    grid.origin_x = domain.x_min;
    grid.origin_y = domain.y_min;
    grid.width = int(std::llround(domain.width() / kBaseGranularity));
    grid.height = int(std::llround(domain.height() / kBaseGranularity));
    grid.counts.assign(std::size_t(grid.width) * grid.height, 0);
    for (const CellEvent& ev : events_5000) {
        if (ev.cell.granularity != kBaseGranularity) {
            throw std::invalid_argument("count grid needs 5000 m events");
        }
        grid.at(int(ev.cell.col), int(ev.cell.row)) += 1;
    }
    return grid;
}

namespace {

// Summed-area table for O(1) sub-rectangle counts, clamped to the grid.
class PrefixCounts {
public:
    explicit PrefixCounts(const CountGrid& grid) : width_(grid.width), height_(grid.height) {
        sums_.assign(std::size_t(width_ + 1) * (height_ + 1), 0);
        for (int r = 0; r < height_; ++r) {
            for (int c = 0; c < width_; ++c) {
                at(c + 1, r + 1) = grid.at(c, r) + at(c, r + 1) + at(c + 1, r) - at(c, r);
            }
        }
    }

    // Count over cell columns [c0, c1) x rows [r0, r1).
    std::uint64_t range(std::int64_t c0, std::int64_t r0, std::int64_t c1, std::int64_t r1) const {
        c0 = std::clamp<std::int64_t>(c0, 0, width_);
        c1 = std::clamp<std::int64_t>(c1, 0, width_);
        r0 = std::clamp<std::int64_t>(r0, 0, height_);
        r1 = std::clamp<std::int64_t>(r1, 0, height_);
        if (c1 <= c0 || r1 <= r0) return 0;
        return at(c1, r1) - at(c0, r1) - at(c1, r0) + at(c0, r0);
    }

private:
    std::uint64_t& at(std::int64_t c, std::int64_t r) {
        return sums_[std::size_t(r) * (width_ + 1) + std::size_t(c)];
    }
    std::uint64_t at(std::int64_t c, std::int64_t r) const {
        return sums_[std::size_t(r) * (width_ + 1) + std::size_t(c)];
    }

    int width_;
    int height_;
    std::vector<std::uint64_t> sums_;
};

// A candidate division in 5000 m lattice units relative to the grid origin.
struct Node {
    int seq = 0; ///< Creation sequence, 1-based.
    std::int64_t c0 = 0, r0 = 0, c1 = 0, r1 = 0; ///< Half-open cell ranges.
    std::uint64_t count = 0;
};

struct NodeOrder {
    // Max-heap by count; ties prefer the earlier-created division.
    bool operator()(const Node& a, const Node& b) const {
        if (a.count != b.count) return a.count < b.count;
        return a.seq > b.seq;
    }
};

std::vector<SpatialDivision> finish(std::vector<Node> leaves, const CountGrid& grid) {
    std::sort(leaves.begin(), leaves.end(), [](const Node& a, const Node& b) { return a.seq < b.seq; });
    std::vector<SpatialDivision> divisions;
    divisions.reserve(leaves.size());
    int id = 1;
    for (const Node& n : leaves) {
        const double g = kBaseGranularity;
        divisions.push_back({id++,
                             Rect{grid.origin_x + double(n.c0) * g, grid.origin_y + double(n.r0) * g,
                                  grid.origin_x + double(n.c1) * g, grid.origin_y + double(n.r1) * g},
                             n.count});
    }
    return divisions;
}

} // namespace

std::vector<SpatialDivision> build_quadtree(const CountGrid& grid, int max_divisions) {
    if (max_divisions < 1) throw std::invalid_argument("max_divisions must be >= 1");
    const PrefixCounts prefix(grid);

    // Root: smallest power-of-two multiple of 5 km covering the grid,
    // anchored at the grid origin.
    std::int64_t side = 1;
    while (side < std::max(grid.width, grid.height)) side *= 2;

    int seq = 0;
    const auto make_node = [&](std::int64_t c0, std::int64_t r0, std::int64_t c1, std::int64_t r1) {
        return Node{++seq, c0, r0, c1, r1, prefix.range(c0, r0, c1, r1)};
    };

    std::priority_queue<Node, std::vector<Node>, NodeOrder> queue;
    queue.push(make_node(0, 0, side, side));
    std::vector<Node> leaves;
    int total = 1;

    while (!queue.empty()) {
        const Node top = queue.top();
        if (total + 3 > max_divisions || top.count == 0 || top.c1 - top.c0 <= 1) break;
        queue.pop();
        const std::int64_t half = (top.c1 - top.c0) / 2;
        queue.push(make_node(top.c0, top.r0, top.c0 + half, top.r0 + half));
        queue.push(make_node(top.c0 + half, top.r0, top.c1, top.r0 + half));
        queue.push(make_node(top.c0, top.r0 + half, top.c0 + half, top.r1));
        queue.push(make_node(top.c0 + half, top.r0 + half, top.c1, top.r1));
        total += 3;
    }
    while (!queue.empty()) {
        leaves.push_back(queue.top());
        queue.pop();
    }
    return finish(std::move(leaves), grid);
}

std::vector<SpatialDivision> build_kdtree(const CountGrid& grid, int max_divisions) {
    if (max_divisions < 1) throw std::invalid_argument("max_divisions must be >= 1");
    const PrefixCounts prefix(grid);

    int seq = 0;
    const auto make_node = [&](std::int64_t c0, std::int64_t r0, std::int64_t c1, std::int64_t r1) {
        return Node{++seq, c0, r0, c1, r1, prefix.range(c0, r0, c1, r1)};
    };

    std::priority_queue<Node, std::vector<Node>, NodeOrder> queue;
    queue.push(make_node(0, 0, grid.width, grid.height));
    std::vector<Node> leaves;
    int total = 1;

    while (!queue.empty()) {
        const Node top = queue.top();
        const std::int64_t w = top.c1 - top.c0;
        const std::int64_t h = top.r1 - top.r0;
        if (total + 1 > max_divisions || std::max(w, h) <= 1) break;
        queue.pop();

        // Longer axis first; ties split along x.
        const bool along_x = w >= h;
        const std::int64_t extent = along_x ? w : h;

        // Best 5 km-aligned balance point, ties at the lower coordinate.
        std::int64_t best_cut = 1;
        std::uint64_t best_diff = ~0ull;
        for (std::int64_t cut = 1; cut < extent; ++cut) {
            const std::uint64_t left =
                along_x ? prefix.range(top.c0, top.r0, top.c0 + cut, top.r1)
                        : prefix.range(top.c0, top.r0, top.c1, top.r0 + cut);
            const std::uint64_t right = top.count - left;
            const std::uint64_t diff = left > right ? left - right : right - left;
            if (diff < best_diff) {
                best_diff = diff;
                best_cut = cut;
            }
        }

        if (along_x) {
            queue.push(make_node(top.c0, top.r0, top.c0 + best_cut, top.r1));
            queue.push(make_node(top.c0 + best_cut, top.r0, top.c1, top.r1));
        } else {
            queue.push(make_node(top.c0, top.r0, top.c1, top.r0 + best_cut));
            queue.push(make_node(top.c0, top.r0 + best_cut, top.c1, top.r1));
        }
        total += 1;
    }
    while (!queue.empty()) {
        leaves.push_back(queue.top());
        queue.pop();
    }
    return finish(std::move(leaves), grid);
}

BalanceReport balance(const std::vector<SpatialDivision>& divisions, const CountGrid& grid) {
    if (divisions.empty()) throw std::invalid_argument("empty division set");

    // Domain = bounding rectangle of the set; verify an exact lattice
    // partition by painting each division's cells.
    Rect domain = divisions.front().rect;
    for (const auto& d : divisions) {
        domain.x_min = std::min(domain.x_min, d.rect.x_min);
        domain.y_min = std::min(domain.y_min, d.rect.y_min);
        domain.x_max = std::max(domain.x_max, d.rect.x_max);
        domain.y_max = std::max(domain.y_max, d.rect.y_max);
    }
    const double g = kBaseGranularity;
    const auto lattice = [&](double v, double origin) {
        const double cells = (v - origin) / g;
        const double snapped = std::round(cells);
        if (std::fabs(cells - snapped) > 1e-9) {
            throw std::invalid_argument("division corner off the 5 km lattice");
        }
        return std::int64_t(snapped);
    };

    const std::int64_t width = lattice(domain.x_max, domain.x_min);
    const std::int64_t height = lattice(domain.y_max, domain.y_min);
    std::vector<std::uint8_t> painted(std::size_t(width) * height, 0);
    for (const auto& d : divisions) {
        const std::int64_t c0 = lattice(d.rect.x_min, domain.x_min);
        const std::int64_t c1 = lattice(d.rect.x_max, domain.x_min);
        const std::int64_t r0 = lattice(d.rect.y_min, domain.y_min);
        const std::int64_t r1 = lattice(d.rect.y_max, domain.y_min);
        if (c1 <= c0 || r1 <= r0) throw std::invalid_argument("degenerate division rectangle");
        for (std::int64_t r = r0; r < r1; ++r) {
            for (std::int64_t c = c0; c < c1; ++c) {
                auto& cell = painted[std::size_t(r) * width + std::size_t(c)];
                if (cell) throw std::invalid_argument("divisions overlap");
                cell = 1;
            }
        }
    }
    for (const auto cell : painted) {
        if (!cell) throw std::invalid_argument("divisions do not cover the domain");
    }

    const PrefixCounts prefix(grid);
    BalanceReport report;
    report.counts.reserve(divisions.size());
    for (const auto& d : divisions) {
        const std::int64_t c0 = lattice(d.rect.x_min, grid.origin_x);
        const std::int64_t c1 = lattice(d.rect.x_max, grid.origin_x);
        const std::int64_t r0 = lattice(d.rect.y_min, grid.origin_y);
        const std::int64_t r1 = lattice(d.rect.y_max, grid.origin_y);
        report.counts.push_back(prefix.range(c0, r0, c1, r1));
    }

    double mean = 0.0;
    for (const auto c : report.counts) mean += double(c);
    mean /= double(report.counts.size());
    double variance = 0.0;
    for (const auto c : report.counts) {
        const double d = double(c) - mean;
        variance += d * d;
    }
    variance /= double(report.counts.size());
    report.sd = std::sqrt(variance);
    report.cv_percent = report.sd == 0.0 ? 0.0 : report.sd / mean * 100.0;
    return report;
}

DivisionIndex::DivisionIndex(const std::vector<SpatialDivision>& divisions) {
    if (divisions.empty()) throw std::invalid_argument("empty division set");
    domain_ = divisions.front().rect;
    for (const auto& d : divisions) {
        domain_.x_min = std::min(domain_.x_min, d.rect.x_min);
        domain_.y_min = std::min(domain_.y_min, d.rect.y_min);
        domain_.x_max = std::max(domain_.x_max, d.rect.x_max);
        domain_.y_max = std::max(domain_.y_max, d.rect.y_max);
    }
    const double g = kBaseGranularity;
    width_ = int(std::llround(domain_.width() / g));
    height_ = int(std::llround(domain_.height() / g));
    id_per_cell_.assign(std::size_t(width_) * height_, 0);
    for (const auto& d : divisions) {
        const auto c0 = std::int64_t(std::llround((d.rect.x_min - domain_.x_min) / g));
        const auto c1 = std::int64_t(std::llround((d.rect.x_max - domain_.x_min) / g));
        const auto r0 = std::int64_t(std::llround((d.rect.y_min - domain_.y_min) / g));
        const auto r1 = std::int64_t(std::llround((d.rect.y_max - domain_.y_min) / g));
        for (std::int64_t r = r0; r < r1; ++r) {
            for (std::int64_t c = c0; c < c1; ++c) {
                id_per_cell_[std::size_t(r) * width_ + std::size_t(c)] = d.id;
            }
        }
    }
}

int DivisionIndex::division_of(double x, double y) const {
    if (!domain_.contains(x, y)) throw std::domain_error("point outside the division domain");
    const double g = kBaseGranularity;
    const auto c = std::int64_t(std::floor((x - domain_.x_min) / g));
    const auto r = std::int64_t(std::floor((y - domain_.y_min) / g));
    return id_per_cell_[std::size_t(r) * width_ + std::size_t(c)];
}

int DivisionIndex::division_of(const CellKey& cell, const GridDomain& domain) const {
    const Rect rect = domain.cell_rect(ancestor(cell, kBaseGranularity));
    return division_of(rect.x_min, rect.y_min);
}

} // namespace seagrid
