#pragma once

#include "seagrid/config.hpp"
#include "seagrid/projection.hpp"

#include <iosfwd>
#include <random>

namespace seagrid {

/// Deterministic synthetic AIS fleet. Ships cruise waypoint to waypoint
/// inside the domain (lane ships inside their corridor), occasionally
/// anchoring, and report DMA-style rows at a fixed interval. Identical
/// seed and config produce identical bytes on every platform.
class FleetGenerator {
public:
    FleetGenerator(const GeneratorConfig& config, Rect domain, const Projection& projection);

    /// Write a DMA-convention CSV (header + rows) to `out`.
    void write_csv(std::ostream& out);

    /// The lane rectangles the generator used, in meters.
    const std::vector<Rect>& lanes() const { return lanes_; }

private:
    double unit();                       ///< Uniform double in [0, 1).
    double uniform(double lo, double hi);

    GeneratorConfig config_;
    Rect domain_;
    Projection projection_;
    std::mt19937_64 rng_;
    std::vector<Rect> lanes_;
};

} // namespace seagrid
