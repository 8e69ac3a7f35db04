#pragma once

#include <vector>

#include "support/bigcomplex.hpp"

namespace gzp {

struct DetourPolicy {
    double guard_radius = 1e-6;  // trigger distance for automatic detours
    double radius_floor = 1e-3;  // minimum detour radius
};

// Polyline with automatic counterclockwise circular detours around
// singularities that lie within the guard radius of a segment.
struct IntegrationPath {
    std::vector<BC> waypoints;
    DetourPolicy detour;
};

inline IntegrationPath straight_path(BC a, BC b) {
    IntegrationPath p;
    p.waypoints = {std::move(a), std::move(b)};
    return p;
}

// Distance from point s to segment [p, q].
BigFloat segment_distance(const BC& s, const BC& p, const BC& q);

// Expands the waypoint polyline into one that detours around singularities.
// Detour radius: max(radius_floor, half the distance to the nearest other
// singularity), clamped so path endpoints stay outside the arc. Throws
// PathThroughSingularity when a waypoint itself sits inside the guard radius.
std::vector<BC> resolve_path(const IntegrationPath& path, const std::vector<BC>& singularities,
                             long prec);

// log(z_end - a) - log(z_start - a) by continuous continuation along the
// polyline; independent of subdivision refinement.
BC tracked_log_polyline(const BC& a, const std::vector<BC>& polyline);

// Public form: resolves detours around `a` first.
BC tracked_log(const BC& a, const IntegrationPath& path, long prec);

// Winding count of the polyline's continuation of log(z - a) relative to the
// principal branch at the endpoints.
Integer winding_offset(const BC& a, const std::vector<BC>& polyline);

}  // namespace gzp
