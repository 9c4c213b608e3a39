#pragma once

#include "seagrid/common.hpp"
#include "seagrid/grid.hpp"

#include <cstdint>
#include <vector>

namespace seagrid {

/// Dense histogram of 5000 m cell-fact counts over the domain. This is
/// the foundation both tree builders balance against.
struct CountGrid {
    double origin_x = 0.0;
    double origin_y = 0.0;
    int width = 0;  ///< Number of 5000 m cells along x.
    int height = 0; ///< Number of 5000 m cells along y.
    std::vector<std::uint64_t> counts; ///< Row-major, width*height entries.

    std::uint64_t at(int col, int row) const { return counts[std::size_t(row) * width + col]; }
    std::uint64_t& at(int col, int row) { return counts[std::size_t(row) * width + col]; }
    std::uint64_t total() const;

    Rect rect() const {
        return Rect{origin_x, origin_y, origin_x + double(width) * kBaseGranularity,
                    origin_y + double(height) * kBaseGranularity};
    }
};

/// Count 5000 m cell facts into a histogram covering `domain`.
CountGrid count_grid_from_events(const std::vector<CellEvent>& events_5000, const Rect& domain);

/// An axis-aligned shard rectangle. Both side lengths are positive
/// multiples of 5000 m, and a division set partitions its domain:
/// pairwise disjoint interiors whose union is the domain rectangle.
struct SpatialDivision {
    int id = 0; ///< Assigned in creation order starting at 1.
    Rect rect;
    std::uint64_t count = 0; ///< Cell facts contained.
};

/// Shard balance metrics over per-division counts.
struct BalanceReport {
    double sd = 0.0;         ///< Population standard deviation.
    double cv_percent = 0.0; ///< sd / mean * 100; zero iff all counts equal.
    std::vector<std::uint64_t> counts;
};

/// Region quad-tree divisions. The root is the smallest square anchored
/// at the grid origin with side 2^n * 5000 m covering the grid; each
/// step splits the highest-count division into four equal quadrants
/// until the budget binds or the best candidate is already 5000 m wide.
/// Zero-count quadrants are kept, so the set always partitions the root.
std::vector<SpatialDivision> build_quadtree(const CountGrid& grid, int max_divisions);

/// kd-tree divisions over the grid rectangle. Each step splits the
/// highest-count division along its longer axis (tie: x) at the
/// 5000 m-aligned coordinate that minimizes |left - right| count
/// (tie: lower coordinate), until the budget binds or the best
/// candidate is a single 5 km cell.
std::vector<SpatialDivision> build_kdtree(const CountGrid& grid, int max_divisions);

/// Validate that `divisions` partition their bounding rectangle on the
/// 5 km lattice and compute balance metrics against `grid`. Throws
/// std::invalid_argument when the set is not a partition.
BalanceReport balance(const std::vector<SpatialDivision>& divisions, const CountGrid& grid);

/// Constant-time point/cell -> division lookup over a division set.
/// Divisions are static: the index never changes after construction.
class DivisionIndex {
public:
    explicit DivisionIndex(const std::vector<SpatialDivision>& divisions);

    /// Division containing (x, y); half-open rectangles, same convention
    /// as cell_of. Throws std::domain_error outside the divisions' domain.
    int division_of(double x, double y) const;

    /// Division wholly containing a cell (5 km divisibility guarantees
    /// every cell of every granularity maps into exactly one division).
    int division_of(const CellKey& cell, const GridDomain& domain) const;

    const Rect& domain() const { return domain_; }

private:
    Rect domain_;
    int width_ = 0;
    int height_ = 0;
    std::vector<int> id_per_cell_; ///< 5000 m lattice, row-major.
};

} // namespace seagrid
