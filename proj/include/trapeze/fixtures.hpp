#pragma once

#include <array>

#include "trapeze/curve.hpp"

namespace trapeze {
namespace fixtures {

JordanCurve circle(double radius = 1.0);
JordanCurve ellipse(double a = 2.0, double b = 1.0);
// convex oval x^4/16 + y^2 = 1, sampled radially
JordanCurve quartic_oval();
JordanCurve unit_square();

// vertices (z, w, z', w') of the trapezoid of class (r, theta) inscribed in
// the circle of radius R, placed symmetrically about the x axis
std::array<Point, 4> circle_trapezoid_vertices(double R, double r, double theta);

// non-convex curve through an exact (r=1/4, theta=pi/2) trapezoid whose
// long-edge arc (between w and w') wraps around the rest of the curve: its
// inscription is almost-elegant
JordanCurve wrapped_long_edge_curve();

// same vertex set but the wrap sits on a leg arc (between z' and w): the
// inscription is neither elegant nor almost-elegant
JordanCurve wrapped_leg_curve();

// asymmetric two-lobe curve whose r=1/4 inscription families limit onto a
// quadrisecant as theta -> pi
JordanCurve two_lobe_curve();

JordanCurve by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace fixtures
}  // namespace trapeze
