#include "trapeze/fixtures.hpp"

#include <cmath>
#include <vector>

#include "trapeze/errors.hpp"

namespace trapeze {
namespace fixtures {

namespace {

// periodic natural cubic spline through uniform knots (cyclic tridiagonal
// system solved by Sherman-Morrison)
class PeriodicSpline {
 public:
  explicit PeriodicSpline(std::vector<Point> y) : y_(std::move(y)) {
    int n = (int)y_.size();
    std::vector<Point> rhs(n);
    for (int i = 0; i < n; ++i)
      rhs[i] = 6.0 * (y_[(i + n - 1) % n] - 2.0 * y_[i] + y_[(i + 1) % n]);
    m_ = solve_cyclic(rhs);
  }

  Point at(double t) const {  // t in [0,1)
    int n = (int)y_.size();
    double x = wrap_param(t) * n;
    int i = std::min((int)x, n - 1);
    double u = x - i;
    Point yi = y_[i], yj = y_[(i + 1) % n];
    Point mi = m_[i], mj = m_[(i + 1) % n];
    double a = 1.0 - u;
    return mi * (a * a * a / 6.0) + mj * (u * u * u / 6.0) + (yi - mi / 6.0) * a +
           (yj - mj / 6.0) * u;
  }

 private:
  std::vector<Point> solve_cyclic(const std::vector<Point>& rhs) const {
    // m[i-1] + 4 m[i] + m[i+1] = rhs[i], cyclic; Sherman-Morrison
    int n = (int)y_.size();
    const double gamma = -4.0;
    std::vector<double> a(n, 1.0), b(n, 4.0), c(n, 1.0);
    b[0] -= gamma;
    b[n - 1] -= c[n - 1] * a[0] / gamma;
    auto thomas = [&](std::vector<Point> d) {
      std::vector<double> cp(n);
      std::vector<Point> dp(n);
      cp[0] = c[0] / b[0];
      dp[0] = d[0] / b[0];
      for (int i = 1; i < n; ++i) {
        double m = b[i] - a[i] * cp[i - 1];
        cp[i] = c[i] / m;
        dp[i] = (d[i] - a[i] * dp[i - 1]) / m;
      }
      std::vector<Point> x(n);
      x[n - 1] = dp[n - 1];
      for (int i = n - 2; i >= 0; --i) x[i] = dp[i] - cp[i] * x[i + 1];
      return x;
    };
    std::vector<Point> x = thomas(rhs);
    std::vector<Point> uvec(n, 0.0);
    uvec[0] = gamma;
    uvec[n - 1] = c[n - 1];
    std::vector<Point> zv = thomas(uvec);
    Point fact = (x[0] + x[n - 1] * a[0] / gamma) /
                 (1.0 + zv[0] + zv[n - 1] * a[0] / gamma);
    for (int i = 0; i < n; ++i) x[i] -= fact * zv[i];
    return x;
  }

  std::vector<Point> y_;
  std::vector<Point> m_;
};

// spline through the control points, resampled so the control points are
// exact trigonometric interpolation nodes
JordanCurve spline_curve(const std::vector<Point>& control, int per_knot) {
  PeriodicSpline sp(control);
  int m = (int)control.size();
  if (per_knot % 2 == 0) ++per_knot;
  while ((m * per_knot) % 2 == 0) ++per_knot;
  int n = m * per_knot;
  std::vector<Point> samples(n);
  for (int i = 0; i < n; ++i) samples[i] = sp.at((double)i / n);
  for (int i = 0; i < m; ++i) samples[(size_t)i * per_knot] = control[i];
  return JordanCurve::from_samples(samples);
}

}  // namespace

JordanCurve circle(double radius) {
  return JordanCurve::fourier({Point(0, 0), Point(0, 0), Point(radius, 0)});
}

JordanCurve ellipse(double a, double b) {
  // a cos + i b sin = (a+b)/2 e^{2 pi i s} + (a-b)/2 e^{-2 pi i s}
  return JordanCurve::fourier({Point((a - b) / 2.0, 0), Point(0, 0), Point((a + b) / 2.0, 0)});
}

JordanCurve quartic_oval() {
  const int n = 513;
  std::vector<Point> pts(n);
  for (int i = 0; i < n; ++i) {
    double phi = kTwoPi * i / n;
    double c = std::cos(phi), s = std::sin(phi);
    double a = c * c * c * c / 16.0;
    double b = s * s;
    double rho2 = std::abs(a) < 1e-14 ? 1.0 / b : (-b + std::sqrt(b * b + 4.0 * a)) / (2.0 * a);
    double rho = std::sqrt(rho2);
    pts[i] = Point(rho * c, rho * s);
  }
  return JordanCurve::from_samples(pts);
}

JordanCurve unit_square() {
  return JordanCurve::polygon({Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)});
}

std::array<Point, 4> circle_trapezoid_vertices(double R, double r, double theta) {
  double t = std::tan(0.5 * theta);
  double L = R / std::sqrt(0.25 + (0.5 - r) * (0.5 - r) * t * t);
  double m = std::sqrt(std::max(0.0, R * R - 0.25 * L * L));
  double rho = std::sqrt(m * m + L * L * (0.5 - r) * (0.5 - r));
  Point p(rho, 0.0);
  Point u1 = std::polar(1.0, 0.5 * theta);
  Point u2 = std::polar(1.0, -0.5 * theta);
  Point z = p + r * L * u1;
  Point w = p - (1.0 - r) * L * u1;
  Point zp = p + r * L * u2;
  Point wp = p - (1.0 - r) * L * u2;
  return {z, w, zp, wp};
}

JordanCurve wrapped_long_edge_curve() {
  auto [z, w, zp, wp] = circle_trapezoid_vertices(1.0, 0.25, 0.5 * kPi);
  std::vector<Point> control = {
      z,
      {1.15, 0.0},
      zp,
      {0.55, -0.55},
      {0.1, -0.75},
      w,
      // long-edge arc: wraps around everything before returning to w'
      {0.5, -1.5},
      {1.8, -1.0},
      {2.2, 0.3},
      {1.5, 1.6},
      {0.0, 2.1},
      {-1.5, 1.7},
      {-2.2, 0.3},
      {-1.8, -1.2},
      {-1.1, -0.6},
      {-0.9, 0.1},
      {-0.75, 0.6},
      wp,
      {-0.1, 0.55},
      {0.35, 0.45},
      {0.7, 0.4},
  };
  return spline_curve(control, 49);
}

JordanCurve wrapped_leg_curve() {
  auto [z, w, zp, wp] = circle_trapezoid_vertices(1.0, 0.25, 0.5 * kPi);
  std::vector<Point> control = {
      z,
      {1.15, 0.0},
      zp,
      // leg arc z' -> w carries the wrap instead
      {1.6, -0.8},
      {2.2, 0.3},
      {1.5, 1.6},
      {0.0, 2.1},
      {-1.5, 1.7},
      {-2.2, 0.3},
      {-1.8, -1.3},
      {-0.7, -1.8},
      {0.4, -1.55},
      {0.05, -1.25},
      w,
      {-0.75, -0.3},
      {-0.8, 0.3},
      wp,
      {-0.1, 0.55},
      {0.35, 0.45},
      {0.7, 0.4},
  };
  return spline_curve(control, 49);
}

JordanCurve two_lobe_curve() {
  const int n = 513;
  std::vector<Point> pts(n);
  for (int i = 0; i < n; ++i) {
    double phi = kTwoPi * i / n;
    double rho = 1.0 + 0.55 * std::cos(2.0 * phi) + 0.06 * std::sin(3.0 * phi);
    pts[i] = Point(rho * std::cos(phi), rho * std::sin(phi));
  }
  return JordanCurve::from_samples(pts);
}

JordanCurve by_name(const std::string& name) {
  if (name == "circle") return circle();
  if (name == "ellipse") return ellipse();
  if (name == "quartic-oval") return quartic_oval();
  if (name == "square") return unit_square();
  if (name == "wrapped-long-edge") return wrapped_long_edge_curve();
  if (name == "wrapped-leg") return wrapped_leg_curve();
  if (name == "two-lobe") return two_lobe_curve();
  throw Error(ErrorCode::DomainError, "unknown fixture: " + name);
}

std::vector<std::string> names() {
  return {"circle",      "ellipse",          "quartic-oval", "square",
          "wrapped-long-edge", "wrapped-leg", "two-lobe"};
}

}  // namespace fixtures
}  // namespace trapeze
