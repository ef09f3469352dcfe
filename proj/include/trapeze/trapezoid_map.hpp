#pragma once

#include <array>

#include "trapeze/geometry.hpp"

namespace trapeze {

// similarity class of isosceles trapezoids: aspect ratio r in (0,1/2],
// crossing angle theta in (0,pi)
struct TrapezoidClass {
  double r;
  double theta;

  TrapezoidClass(double r_, double theta_);
  // bypasses the open-interval gate for limit studies (theta = 0 or pi)
  static TrapezoidClass unchecked(double r_, double theta_);

 private:
  TrapezoidClass() = default;
};

struct PointPair {
  Point z, w;
};

// ((1-r) z + r w, sqrt(r(1-r)) (z-w))
PointPair f_forward(double r, PointPair p);
PointPair f_inverse(double r, PointPair p);

// rotate z and w clockwise by theta about p = (1-r) z + r w
PointPair g_map(const TrapezoidClass& cls, PointPair p);
// the same map through the linear-coordinates route (cross-check)
PointPair g_map_via_matrices(const TrapezoidClass& cls, PointPair p);

// complex coefficients of the linear map: z' = a z + b w, w' = c z + d w
struct GMapCoefficients {
  Point a, b, c, d;
};
GMapCoefficients g_map_coefficients(double r, double theta);

// 1/2 theta r (1-r) |z-w|^2, area units
double hamiltonian(const TrapezoidClass& cls, PointPair p);

// time-t flow: rotation by t*theta clockwise about the crossing point
PointPair flow(const TrapezoidClass& cls, double t, PointPair p);

using Mat4 = std::array<std::array<double, 4>, 4>;

// Jacobian of g_map as a real-linear map R^4 -> R^4 in (x1,y1,x2,y2)
Mat4 g_map_jacobian(const TrapezoidClass& cls);

// the form (1-r) dx1^dy1 + r dx2^dy2 as a matrix
Mat4 symplectic_form_matrix(double r);

// max |(J^T Omega J - Omega)_ij|
double symplectic_defect(const TrapezoidClass& cls);

}  // namespace trapeze
