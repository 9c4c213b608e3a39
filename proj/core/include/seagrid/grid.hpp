#pragma once

#include "seagrid/common.hpp"
#include "seagrid/trajectory.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace seagrid {

/// The four aligned cell granularities, meters.
inline constexpr std::array<int, 4> kGranularities{50, 200, 1000, 5000};

inline constexpr int kBaseGranularity = 5000;

bool is_granularity(int g);

/// One cell of the aligned hierarchy. col/row are non-negative indices
/// relative to the domain origin; the cell rectangle is half-open:
/// [origin + col*g, origin + (col+1)*g) x [origin + row*g, origin + (row+1)*g).
struct CellKey {
    int granularity = kBaseGranularity;
    std::int64_t col = 0;
    std::int64_t row = 0;

    friend bool operator==(const CellKey& a, const CellKey& b) = default;
};

/// Next coarser cell containing this one (50->200->1000->5000).
/// Throws std::domain_error when called on a 5000 m cell.
CellKey parent(const CellKey& cell);

/// Ancestor of `cell` at granularity `g` (g coarser or equal).
CellKey ancestor(const CellKey& cell, int g);

/// The spatial domain rectangle and the cell indexing relative to its
/// lower-left origin.
class GridDomain {
public:
    explicit GridDomain(Rect rect);

    const Rect& rect() const { return rect_; }

    /// Cell containing (x, y). Boundary points belong to the cell on
    /// their upper-right side. Throws std::domain_error outside the domain.
    CellKey cell_of(double x, double y, int granularity) const;

    /// Rectangle covered by a cell, in meters.
    Rect cell_rect(const CellKey& cell) const;

private:
    Rect rect_;
};

/// One ship's passage through one grid cell: a maximal interval during
/// which the linearly interpolated position stays in the cell, clipped
/// at day boundaries so each event carries a single date id.
struct CellEvent {
    CellKey cell;
    std::uint64_t trajectory_id = 0;
    std::uint32_t mmsi = 0;
    double t_enter = 0.0; ///< Fractional seconds allowed (boundary interpolation).
    double t_exit = 0.0;
    double duration = 0.0;
    std::optional<double> avg_sog;  ///< Time-weighted mean SOG over the interval, knots.
    double delta_cog = 0.0;         ///< Sum of |wrapped| COG changes inside the event, degrees.
    double delta_heading = 0.0;
    std::optional<double> min_draught;
    std::uint32_t date_id = 0; ///< YYYYMMDD of t_enter.
    bool infer_stopped = false;
};

/// Roll a trajectory up into cell-crossing events at one granularity.
///
/// Crossing times are exact segment/lattice intersections (a DDA-style
/// traversal, not a spatial join), so events tile the trajectory's time
/// span: the durations at any granularity sum to the trajectory
/// duration. Tangent touches and corner passes never produce
/// zero-duration events. All points must lie inside the domain.
std::vector<CellEvent> rollup_cells(const Trajectory& traj, const GridDomain& domain,
                                    int granularity);

} // namespace seagrid
