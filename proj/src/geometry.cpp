#include "teichkit/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace teichkit {

namespace {

double cross(Complex o, Complex a, Complex b) {
    const Complex u = a - o, v = b - o;
    return u.real() * v.imag() - u.imag() * v.real();
}

int orientation(Complex o, Complex a, Complex b, double eps) {
    const double c = cross(o, a, b);
    if (c > eps) return 1;
    if (c < -eps) return -1;
    return 0;
}

bool on_segment(Complex p, Complex q, Complex r) {
    return std::min(p.real(), r.real()) - 1e-15 <= q.real() &&
           q.real() <= std::max(p.real(), r.real()) + 1e-15 &&
           std::min(p.imag(), r.imag()) - 1e-15 <= q.imag() &&
           q.imag() <= std::max(p.imag(), r.imag()) + 1e-15;
}

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm3(const Vec3& a) { return std::sqrt(dot(a, a)); }

} // namespace

bool segments_intersect(Complex a0, Complex a1, Complex b0, Complex b1) {
    const double scale = std::max({std::abs(a1 - a0), std::abs(b1 - b0), 1e-30});
    const double eps = 1e-14 * scale * scale;
    const int o1 = orientation(a0, a1, b0, eps);
    const int o2 = orientation(a0, a1, b1, eps);
    const int o3 = orientation(b0, b1, a0, eps);
    const int o4 = orientation(b0, b1, a1, eps);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(a0, b0, a1)) return true;
    if (o2 == 0 && on_segment(a0, b1, a1)) return true;
    if (o3 == 0 && on_segment(b0, a0, b1)) return true;
    if (o4 == 0 && on_segment(b0, a1, b1)) return true;
    return false;
}

bool polyline_self_intersects(std::span<const Complex> closed, int* seg_a, int* seg_b) {
    const int n = static_cast<int>(closed.size());
    if (n < 4) return false;
    auto pt = [&](int i) { return closed[static_cast<size_t>(((i % n) + n) % n)]; };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;  // adjacent through the wrap
            if (segments_intersect(pt(i), pt(i + 1), pt(j), pt(j + 1))) {
                if (seg_a) *seg_a = i;
                if (seg_b) *seg_b = j;
                return true;
            }
        }
    }
    return false;
}

int winding_number(std::span<const Complex> closed, Complex q) {
    const int n = static_cast<int>(closed.size());
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const Complex u = closed[static_cast<size_t>(i)] - q;
        const Complex v = closed[static_cast<size_t>((i + 1) % n)] - q;
        total += std::arg(v / u);
    }
    return static_cast<int>(std::lround(total / (2.0 * M_PI)));
}

bool polylines_cross(std::span<const Complex> a, std::span<const Complex> b) {
    const int na = static_cast<int>(a.size());
    const int nb = static_cast<int>(b.size());
    for (int i = 0; i < na; ++i) {
        const Complex p0 = a[static_cast<size_t>(i)];
        const Complex p1 = a[static_cast<size_t>((i + 1) % na)];
        for (int j = 0; j < nb; ++j) {
            if (segments_intersect(p0, p1, b[static_cast<size_t>(j)],
                                   b[static_cast<size_t>((j + 1) % nb)]))
                return true;
        }
    }
    return false;
}

double segment_distance3(const Vec3& a0, const Vec3& a1, const Vec3& b0, const Vec3& b1) {
    // Standard clamped closest-point computation between two segments.
    const Vec3 d1 = sub(a1, a0), d2 = sub(b1, b0), r = sub(a0, b0);
    const double A = dot(d1, d1), E = dot(d2, d2), F = dot(d2, r);
    double s = 0.0, t = 0.0;
    const double tiny = 1e-30;
    if (A <= tiny && E <= tiny) {
        s = t = 0.0;
    } else if (A <= tiny) {
        t = std::clamp(F / E, 0.0, 1.0);
    } else {
        const double C = dot(d1, r);
        if (E <= tiny) {
            s = std::clamp(-C / A, 0.0, 1.0);
        } else {
            const double B = dot(d1, d2);
            const double denom = A * E - B * B;
            s = denom > tiny ? std::clamp((B * F - C * E) / denom, 0.0, 1.0) : 0.0;
            t = (B * s + F) / E;
            if (t < 0.0) {
                t = 0.0;
                s = std::clamp(-C / A, 0.0, 1.0);
            } else if (t > 1.0) {
                t = 1.0;
                s = std::clamp((B - C) / A, 0.0, 1.0);
            }
        }
    }
    const Vec3 pa = {a0[0] + s * d1[0], a0[1] + s * d1[1], a0[2] + s * d1[2]};
    const Vec3 pb = {b0[0] + t * d2[0], b0[1] + t * d2[1], b0[2] + t * d2[2]};
    return norm3(sub(pa, pb));
}

double polyline_min_distance3(std::span<const Vec3> a, std::span<const Vec3> b) {
    const int na = static_cast<int>(a.size());
    const int nb = static_cast<int>(b.size());
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < na; ++i) {
        const Vec3& p0 = a[static_cast<size_t>(i)];
        const Vec3& p1 = a[static_cast<size_t>((i + 1) % na)];
        for (int j = 0; j < nb; ++j) {
            best = std::min(best, segment_distance3(p0, p1, b[static_cast<size_t>(j)],
                                                    b[static_cast<size_t>((j + 1) % nb)]));
        }
    }
    return best;
}

double polyline_sag3(std::span<const Vec3> closed) {
    const int n = static_cast<int>(closed.size());
    if (n < 3) return 0.0;
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        const Vec3& prev = closed[static_cast<size_t>((i + n - 1) % n)];
        const Vec3& cur = closed[static_cast<size_t>(i)];
        const Vec3& next = closed[static_cast<size_t>((i + 1) % n)];
        const Vec3 mid = {0.5 * (prev[0] + next[0]), 0.5 * (prev[1] + next[1]),
                          0.5 * (prev[2] + next[2])};
        worst = std::max(worst, norm3(sub(cur, mid)));
    }
    return worst;
}

} // namespace teichkit
