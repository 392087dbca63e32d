#pragma once

#include <array>
#include <span>
#include <vector>

#include "teichkit/series.hpp"

namespace teichkit {

using Vec3 = std::array<double, 3>;

// Segment [a0,a1] vs [b0,b1] in the plane; touching counts as intersecting.
bool segments_intersect(Complex a0, Complex a1, Complex b0, Complex b1);

// Closed polyline (implicit edge from back to front). Returns true and the
// offending segment indices when two non-adjacent segments intersect.
bool polyline_self_intersects(std::span<const Complex> closed, int* seg_a = nullptr,
                              int* seg_b = nullptr);

// Winding number of a closed polyline around q (signed, ±1 inside a Jordan
// curve, 0 outside).
int winding_number(std::span<const Complex> closed, Complex q);

// Whether two 2D closed polylines have intersecting segments.
bool polylines_cross(std::span<const Complex> a, std::span<const Complex> b);

double segment_distance3(const Vec3& a0, const Vec3& a1, const Vec3& b0, const Vec3& b1);
double polyline_min_distance3(std::span<const Vec3> a, std::span<const Vec3> b);

// Discretization error proxy: max deviation of a vertex from the chord of its
// neighbours.
double polyline_sag3(std::span<const Vec3> closed);

} // namespace teichkit
