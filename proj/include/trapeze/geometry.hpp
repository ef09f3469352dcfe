#pragma once

#include <cmath>
#include <complex>

namespace trapeze {

using Point = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

inline double dot(Point a, Point b) { return a.real() * b.real() + a.imag() * b.imag(); }
inline double cross(Point a, Point b) { return a.real() * b.imag() - a.imag() * b.real(); }
inline double norm2(Point a) { return dot(a, a); }

// rotate by -90 degrees: for a counterclockwise curve this turns the tangent
// into the outward normal
inline Point outward_normal(Point tangent) { return Point(tangent.imag(), -tangent.real()); }

// reduce to [0,1)
inline double wrap_param(double s) {
  double r = s - std::floor(s);
  if (r >= 1.0) r -= 1.0;
  return r;
}

// signed distance from a to b on the parameter circle, in (-1/2, 1/2]
inline double param_diff(double a, double b) {
  double d = wrap_param(a - b);
  if (d > 0.5) d -= 1.0;
  return d;
}

inline double param_dist(double a, double b) { return std::abs(param_diff(a, b)); }

}  // namespace trapeze
