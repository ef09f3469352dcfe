#pragma once

#include <memory>
#include <string>
#include <vector>

#include "trapeze/geometry.hpp"

namespace trapeze {

enum class CurveKind { Fourier, Polygon };

struct Projection {
  double s = 0.0;                // parameter of the nearest curve point
  double signed_distance = 0.0;  // positive outside, negative inside
  bool ambiguous = false;        // two local minimizers agree within tolerance
};

// A positively oriented (counterclockwise) simple closed curve parametrized
// over [0,1). Smooth curves are stored as complex Fourier coefficients
// c_k, k = -K..K, of s -> sum c_k e^{2 pi i k s}; polygons stay exact
// piecewise-linear with parameter proportional to arc length. All global
// scalars are computed once at construction; a curve value is immutable and
// safe to share across threads.
class JordanCurve {
 public:
  // coefficients indexed k = -K..K (size 2K+1)
  static JordanCurve fourier(std::vector<Point> coefficients);
  static JordanCurve polygon(std::vector<Point> vertices);
  // closed sample list, converted to Fourier by trigonometric least squares
  static JordanCurve from_samples(const std::vector<Point>& points);

  CurveKind kind() const { return kind_; }
  bool smooth() const { return kind_ == CurveKind::Fourier; }
  bool orientation_was_reversed() const { return reversed_on_load_; }

  Point eval(double s) const;
  Point derivative(double s) const;
  Point second_derivative(double s) const;
  double curvature(double s) const;             // smooth only
  double curvature_derivative(double s) const;  // d(kappa)/ds, smooth only

  double area() const { return area_; }
  double radius() const { return radius_; }  // half the diameter
  double arc_length() const { return arc_length_; }
  double diameter() const { return 2.0 * radius_; }
  double enclosing_circle_radius() const { return enclosing_radius_; }

  // recomputation routes used by the invariant checks
  double area_by_quadrature() const;
  double arc_length_by_quadrature() const;

  Projection project(Point p) const;

  // min over a dense self-distance grid of |gamma(s)-gamma(t)|,
  // param_dist(s,t) >= 1e-3; the simplicity gate compares this against
  // 1e-9 * diameter
  double min_self_distance() const;

  // max |gamma(s)-gamma(t)| over param_dist(s,t) <= eps
  double modulus_of_continuity(double eps) const;

  // line integral of x dy along the parameter interval s0 -> s1 (signed by
  // direction, intervals may wrap or span several periods)
  double integral_x_dy(double s0, double s1) const;
  // ingredients of the Green's-theorem area: 1/2 integral of (x y' - y x')
  double green_area(double s0, double s1) const;

  JordanCurve translated(Point t) const;
  JordanCurve rotated(double angle) const;
  JordanCurve scaled(double factor) const;  // about the curve's mean point

  const std::vector<Point>& fourier_coefficients() const { return coeff_; }
  int fourier_modes() const { return K_; }
  const std::vector<Point>& polygon_vertices() const { return verts_; }

  // dense cached samples (positions and derivatives) used for seeding
  int table_size() const { return (int)table_pos_.size(); }
  double table_param(int i) const { return (double)i / (double)table_pos_.size(); }
  Point table_point(int i) const { return table_pos_[i]; }
  Point table_derivative(int i) const { return table_der_[i]; }

 private:
  JordanCurve() = default;
  void finalize(bool check_simple);

  CurveKind kind_ = CurveKind::Fourier;
  std::vector<Point> coeff_;  // fourier: k = -K..K
  int K_ = 0;
  std::vector<Point> verts_;       // polygon
  std::vector<double> vert_param_;  // polygon: parameter of each vertex (arc-length fractions)
  double perimeter_ = 0.0;

  bool reversed_on_load_ = false;
  double area_ = 0.0;
  double radius_ = 0.0;
  double arc_length_ = 0.0;
  double enclosing_radius_ = 0.0;

  std::vector<Point> table_pos_;
  std::vector<Point> table_der_;

  Point eval_raw(double s) const;
  Point derivative_raw(double s) const;
  int polygon_edge_at(double s, double* t) const;
  double project_distance_refined(Point p, int table_idx) const;
  int quadrature_panels(double a, double b) const;
};

// smallest enclosing circle of a point set (deterministic)
struct Circle {
  Point center;
  double radius = 0.0;
};
Circle smallest_enclosing_circle(const std::vector<Point>& pts);

}  // namespace trapeze
