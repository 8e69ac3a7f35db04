#include "core/paths.hpp"

#include <algorithm>

#include "support/errors.hpp"

namespace gzp {

BigFloat segment_distance(const BC& s, const BC& p, const BC& q) {
    BC d = q - p;
    BigFloat len2 = d.re * d.re + d.im * d.im;
    if (len2.is_zero()) return abs(s - p);
    // projection parameter clamped to [0, 1]
    BigFloat t = ((s.re - p.re) * d.re + (s.im - p.im) * d.im) / len2;
    BigFloat zero(t.prec()), one = BigFloat::of(1L, t.prec());
    if (t < zero) t = zero;
    if (t > one) t = one;
    BC foot(p.re + t * d.re, p.im + t * d.im);
    return abs(s - foot);
}

namespace {

struct Detour {
    BigFloat t;  // projection parameter along the segment
    BC center;
    BigFloat radius;
};

}  // namespace

std::vector<BC> resolve_path(const IntegrationPath& path, const std::vector<BC>& singularities,
                             long prec) {
    const auto& wp = path.waypoints;
    std::vector<BC> out;
    if (wp.size() < 2) {
        out = wp;
        return out;
    }
    BigFloat guard = BigFloat::of(path.detour.guard_radius, prec);
    BigFloat floor_r = BigFloat::of(path.detour.radius_floor, prec);

    for (size_t i = 0; i + 1 < wp.size(); ++i)
        if (wp[i] == wp[i + 1])
            throw Error(ErrorKind::PathThroughSingularity, "consecutive waypoints coincide");
    for (const BC& w : wp)
        for (const BC& s : singularities)
            if (abs(w - s) < guard)
                throw Error(ErrorKind::PathThroughSingularity,
                            "waypoint within guard radius of a singularity");

    const BC& start = wp.front();
    const BC& end = wp.back();

    out.push_back(wp[0]);
    for (size_t i = 0; i + 1 < wp.size(); ++i) {
        const BC& p = wp[i];
        const BC& q = wp[i + 1];
        BC dir = q - p;
        BigFloat seg_len = abs(dir);
        BC u(dir.re / seg_len, dir.im / seg_len);

        std::vector<Detour> detours;
        for (const BC& s : singularities) {
            BigFloat d = segment_distance(s, p, q);
            if (!(d < guard)) continue;
            BigFloat t = ((s.re - p.re) * u.re + (s.im - p.im) * u.im);  // arclength along segment
            BigFloat r = floor_r;
            // half the distance to the nearest other singularity
            bool have_other = false;
            BigFloat nearest(prec);
            for (const BC& o : singularities) {
                if (o == s) continue;
                BigFloat od = abs(o - s);
                if (!have_other || od < nearest) { nearest = od; have_other = true; }
            }
            if (have_other) {
                BigFloat half = nearest / BigFloat::of(2L, prec);
                if (half > r) r = half;
            }
            // keep the overall path endpoints strictly outside the arc
            BigFloat cap = abs(start - s) * BigFloat::of(0.9, prec);
            BigFloat cap2 = abs(end - s) * BigFloat::of(0.9, prec);
            if (cap2 < cap) cap = cap2;
            if (r > cap) r = cap;
            detours.push_back({t, s, r});
        }
        std::sort(detours.begin(), detours.end(),
                  [](const Detour& a, const Detour& b) { return a.t < b.t; });

        for (const Detour& dt : detours) {
            // chord half-length inside the circle of radius r around the pole
            BigFloat d = segment_distance(dt.center, p, q);
            BigFloat h2 = dt.radius * dt.radius - d * d;
            if (h2.sign() <= 0) continue;
            BigFloat h = sqrt(h2);
            BigFloat t_in = dt.t - h, t_out = dt.t + h;
            BigFloat zero(prec);
            if (t_in < zero) t_in = zero;
            if (t_out > seg_len) t_out = seg_len;
            BC entry(p.re + t_in * u.re, p.im + t_in * u.im);
            BC exit(p.re + t_out * u.re, p.im + t_out * u.im);
            BigFloat th_in = arg(entry - dt.center);
            BigFloat th_out = arg(exit - dt.center);
            BigFloat two_pi = BigFloat::pi(prec) * BigFloat::of(2L, prec);
            BigFloat sweep = th_out - th_in;
            while (sweep <= BigFloat(prec)) sweep += two_pi;  // counterclockwise
            BigFloat r_in = abs(entry - dt.center);
            BigFloat r_out = abs(exit - dt.center);
            long nseg = 4 + static_cast<long>(sweep.to_double() / 0.25);
            if (out.back() != entry) out.push_back(entry);
            for (long kk = 1; kk < nseg; ++kk) {
                BigFloat f = BigFloat::of(kk, prec) / BigFloat::of(nseg, prec);
                BigFloat th = th_in + sweep * f;
                // interpolate radius so clamped entry/exit join smoothly
                BigFloat rr = r_in + (r_out - r_in) * f;
                out.push_back(BC(dt.center.re + rr * cos(th), dt.center.im + rr * sin(th)));
            }
            out.push_back(exit);
        }
        if (out.back() != q) out.push_back(q);
    }
    return out;
}

BC tracked_log_polyline(const BC& a, const std::vector<BC>& polyline) {
    long prec = a.prec();
    for (const BC& w : polyline)
        if (w.prec() < prec) prec = w.prec();
    BC total(prec);
    if (polyline.size() < 2) return total;
    for (size_t i = 0; i + 1 < polyline.size(); ++i) {
        BC u = polyline[i] - a;
        BC v = polyline[i + 1] - a;
        if (u.is_zero() || v.is_zero())
            throw Error(ErrorKind::PathThroughSingularity, "path touches the branch point");
        // straight segment avoiding `a` turns by less than pi, so the
        // principal argument of the ratio is the continuous change
        BC ratio = v * u.conj();
        total += BC(log(abs(v)) - log(abs(u)), atan2(ratio.im, ratio.re));
    }
    return total;
}

BC tracked_log(const BC& a, const IntegrationPath& path, long prec) {
    std::vector<BC> polyline = resolve_path(path, {a}, prec);
    return tracked_log_polyline(a, polyline);
}

Integer winding_offset(const BC& a, const std::vector<BC>& polyline) {
    if (polyline.size() < 2) return Integer(0);
    BC tracked = tracked_log_polyline(a, polyline);
    BC principal = log(polyline.back() - a) - log(polyline.front() - a);
    BigFloat two_pi = BigFloat::pi(tracked.im.prec()) * BigFloat::of(2L, tracked.im.prec());
    return round_to_integer((tracked.im - principal.im) / two_pi);
}

}  // namespace gzp
