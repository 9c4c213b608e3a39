#pragma once

#include "seagrid/common.hpp"

namespace seagrid {

/// Equirectangular projection around a configurable reference point.
///
///   x = R * cos(lat_ref) * (lng - lng_ref) * pi/180
///   y = R * (lat - lat_ref) * pi/180
///
/// Deterministic, injective over the domain, and exactly invertible,
/// which keeps all grid math in planar meters.
class Projection {
public:
    Projection(double lat_ref, double lng_ref)
        : lat_ref_(lat_ref), lng_ref_(lng_ref), cos_ref_(std::cos(lat_ref * kDegToRad)) {}

    double lat_ref() const { return lat_ref_; }
    double lng_ref() const { return lng_ref_; }

    void forward(double lat, double lng, double& x, double& y) const {
        x = kEarthRadiusM * cos_ref_ * (lng - lng_ref_) * kDegToRad;
        y = kEarthRadiusM * (lat - lat_ref_) * kDegToRad;
    }

    void inverse(double x, double y, double& lat, double& lng) const {
        lng = lng_ref_ + x / (kEarthRadiusM * cos_ref_) * kRadToDeg;
        lat = lat_ref_ + y / kEarthRadiusM * kRadToDeg;
    }

    static bool in_valid_range(double lat, double lng) {
        return lat >= -90.0 && lat <= 90.0 && lng >= -180.0 && lng <= 180.0;
    }

private:
    static constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
    static constexpr double kRadToDeg = 180.0 / 3.14159265358979323846;

    double lat_ref_;
    double lng_ref_;
    double cos_ref_;
};

} // namespace seagrid
