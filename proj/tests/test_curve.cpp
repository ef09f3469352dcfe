#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "trapeze/binormals.hpp"
#include "trapeze/curve.hpp"
#include "trapeze/curve_io.hpp"
#include "trapeze/errors.hpp"
#include "trapeze/fixtures.hpp"
#include "trapeze/geometry.hpp"

using namespace trapeze;

namespace {
const double kPiLocal = 3.14159265358979323846;
}

TEST_CASE("eval on canonical curves") {
  JordanCurve circle = fixtures::circle();
  CHECK(std::abs(circle.eval(0.0) - Point(1, 0)) < 1e-14);
  CHECK(std::abs(circle.eval(0.25) - Point(0, 1)) < 1e-14);

  JordanCurve ell = fixtures::ellipse(2.0, 1.0);
  CHECK(std::abs(ell.eval(0.5) - Point(-2, 0)) < 1e-13);
}

TEST_CASE("eval is periodic") {
  JordanCurve ell = fixtures::ellipse();
  for (double s : {0.125, 0.375, 0.625}) {
    CHECK(ell.eval(s) == ell.eval(s + 1.0));
    CHECK(ell.eval(s) == ell.eval(s - 1.0));
  }
}

TEST_CASE("areas of canonical curves") {
  CHECK(fixtures::circle().area() == doctest::Approx(kPiLocal).epsilon(1e-12));
  CHECK(fixtures::unit_square().area() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(fixtures::ellipse(2, 1).area() == doctest::Approx(2 * kPiLocal).epsilon(1e-12));
}

TEST_CASE("fourier area has an independent analytic route") {
  // area = pi sum k |c_k|^2 for fourier curves
  JordanCurve ell = fixtures::ellipse(2, 1);
  const auto& c = ell.fourier_coefficients();
  int K = ell.fourier_modes();
  double analytic = 0.0;
  for (int k = -K; k <= K; ++k) analytic += k * norm2(c[k + K]);
  analytic *= kPiLocal;
  CHECK(ell.area() == doctest::Approx(analytic).epsilon(1e-12));
}

TEST_CASE("radius is half the diameter") {
  CHECK(fixtures::circle().radius() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(fixtures::ellipse(2, 1).radius() == doctest::Approx(2.0).epsilon(1e-10));
  // brute force over vertex pairs gives sqrt(2) for the unit square
  CHECK(fixtures::unit_square().radius() == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-14));
}

TEST_CASE("cached scalars agree with recomputation") {
  for (const auto& name : {"circle", "ellipse", "quartic-oval"}) {
    JordanCurve c = fixtures::by_name(name);
    CHECK(c.area() == doctest::Approx(c.area_by_quadrature()).epsilon(1e-12));
    CHECK(c.arc_length() == doctest::Approx(c.arc_length_by_quadrature()).epsilon(1e-12));
  }
}

TEST_CASE("area invariance under rigid motions and quadratic scaling") {
  JordanCurve oval = fixtures::quartic_oval();
  JordanCurve moved = oval.rotated(0.7).translated(Point(3.5, -1.25));
  CHECK(moved.area() == doctest::Approx(oval.area()).epsilon(1e-10));
  JordanCurve big = oval.scaled(2.5);
  CHECK(big.area() == doctest::Approx(oval.area() * 6.25).epsilon(1e-10));
}

TEST_CASE("isoperimetric bound on the fixture corpus") {
  for (const auto& name : fixtures::names()) {
    JordanCurve c = fixtures::by_name(name);
    CHECK(c.radius() >= std::sqrt(c.area() / kPiLocal) * (1.0 - 1e-9));
  }
}

TEST_CASE("orientation is normalized to counterclockwise") {
  JordanCurve cw = JordanCurve::polygon({Point(0, 0), Point(0, 1), Point(1, 1), Point(1, 0)});
  CHECK(cw.orientation_was_reversed());
  CHECK(cw.area() > 0.0);
  // clockwise circle: c_{-1} = 1
  JordanCurve c = JordanCurve::fourier({Point(1, 0), Point(0, 0), Point(0, 0)});
  CHECK(c.orientation_was_reversed());
  CHECK(c.area() == doctest::Approx(kPiLocal).epsilon(1e-12));
}

TEST_CASE("non-simple input is rejected") {
  // figure-eight style samples
  std::vector<Point> pts;
  for (int i = 0; i < 257; ++i) {
    double t = 2 * kPiLocal * i / 257;
    pts.emplace_back(std::sin(2 * t), std::sin(t));
  }
  CHECK_THROWS_AS((void)JordanCurve::from_samples(pts), Error);
}

TEST_CASE("projection: circle exterior point") {
  JordanCurve circle = fixtures::circle();
  Projection p = circle.project(Point(2, 0));
  CHECK(p.s == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(p.signed_distance == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_FALSE(p.ambiguous);
}

TEST_CASE("projection: circle center is ambiguous and inside") {
  JordanCurve circle = fixtures::circle();
  Projection p = circle.project(Point(0, 0));
  CHECK(p.signed_distance == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(p.ambiguous);
}

TEST_CASE("projection: square interior point hits the top edge") {
  JordanCurve sq = fixtures::unit_square();
  Projection p = sq.project(Point(0.5, 0.6));
  CHECK(p.signed_distance == doctest::Approx(-0.4).epsilon(1e-12));
  CHECK(std::abs(sq.eval(p.s) - Point(0.5, 1.0)) < 1e-12);
  // |gamma(s)-p| - |d| = 0
  CHECK(std::abs(sq.eval(p.s) - Point(0.5, 0.6)) ==
        doctest::Approx(std::abs(p.signed_distance)).epsilon(1e-12));
}

TEST_CASE("project after eval returns the parameter") {
  JordanCurve oval = fixtures::quartic_oval();
  for (double s : {0.03, 0.21, 0.48, 0.77, 0.9}) {
    Projection p = oval.project(oval.eval(s));
    CHECK(param_dist(p.s, s) < 1e-10);
    CHECK(std::abs(p.signed_distance) < 1e-10);
  }
}

TEST_CASE("binormals of the ellipse are the axes") {
  BinormalSet bs = binormals(fixtures::ellipse(2, 1));
  REQUIRE(bs.binormals.size() == 2);
  CHECK(bs.binormals[0].length == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(bs.binormals[1].length == doctest::Approx(2.0).epsilon(1e-9));
  CHECK_FALSE(bs.degenerate_family);
}

TEST_CASE("binormals of the circle form a degenerate family") {
  BinormalSet bs = binormals(fixtures::circle());
  CHECK(bs.degenerate_family);
  REQUIRE(!bs.binormals.empty());
  CHECK(bs.binormals[0].length == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("binormal orthogonality and the longest-chord check on the oval") {
  JordanCurve oval = fixtures::quartic_oval();
  BinormalSet bs = binormals(oval);
  REQUIRE(!bs.binormals.empty());
  // every binormal chord is orthogonal to both tangents within 1e-8 rad
  for (const auto& b : bs.binormals) {
    Point chord = b.p2 - b.p1;
    for (double s : {b.s1, b.s2}) {
      Point t = oval.derivative(s);
      double sin_dev = std::abs(dot(chord, t)) / (std::abs(chord) * std::abs(t));
      CHECK(sin_dev < 1e-8);
    }
  }
  // longest binormal matches the brute-force farthest pair on a dense grid
  const int n = 2048;
  std::vector<Point> pts(n);
  for (int i = 0; i < n; ++i) pts[i] = oval.eval((double)i / n);
  double brute = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) brute = std::max(brute, norm2(pts[i] - pts[j]));
  brute = std::sqrt(brute);
  CHECK(bs.binormals[0].length == doctest::Approx(brute).epsilon(1e-6));
}

TEST_CASE("binormals reject polygons") {
  CHECK_THROWS_AS((void)binormals(fixtures::unit_square()), Error);
}

TEST_CASE("curve io round trip") {
  JordanCurve ell = fixtures::ellipse(2, 1);
  std::string text = curve_to_json(ell);
  LoadedCurve back = load_curve_json(text);
  CHECK(back.curve.area() == doctest::Approx(ell.area()).epsilon(1e-12));
  for (double s : {0.1, 0.4, 0.9})
    CHECK(std::abs(back.curve.eval(s) - ell.eval(s)) < 1e-10);

  JordanCurve sq = fixtures::unit_square();
  LoadedCurve sq2 = load_curve_json(curve_to_json(sq));
  CHECK(sq2.curve.kind() == CurveKind::Polygon);
  CHECK(sq2.curve.area() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("samples loader reproduces a smooth curve") {
  std::vector<Point> pts;
  for (int i = 0; i < 129; ++i) {
    double s = (double)i / 129;
    pts.push_back(fixtures::ellipse(2, 1).eval(s));
  }
  JordanCurve c = JordanCurve::from_samples(pts);
  CHECK(c.area() == doctest::Approx(2 * kPiLocal).epsilon(1e-10));
  CHECK(std::abs(c.eval(0.0) - Point(2, 0)) < 1e-9);
}

TEST_CASE("smallest enclosing circle is reported alongside half-diameter") {
  // equilateral-ish triangle-like curve: enclosing radius differs from
  // half-diameter; on the circle both agree
  JordanCurve circle = fixtures::circle();
  CHECK(circle.enclosing_circle_radius() == doctest::Approx(1.0).epsilon(1e-6));
  JordanCurve ell = fixtures::ellipse(2, 1);
  CHECK(ell.enclosing_circle_radius() == doctest::Approx(2.0).epsilon(1e-6));
}
