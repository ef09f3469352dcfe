#include "trapeze/trapezoid_map.hpp"

#include <cmath>

#include "trapeze/errors.hpp"

namespace trapeze {

TrapezoidClass::TrapezoidClass(double r_, double theta_) : r(r_), theta(theta_) {
  if (!(r > 0.0 && r <= 0.5)) throw Error(ErrorCode::DomainError, "r must lie in (0, 1/2]");
  if (!(theta > 0.0 && theta < kPi))
    throw Error(ErrorCode::DomainError, "theta must lie in (0, pi)");
}

TrapezoidClass TrapezoidClass::unchecked(double r_, double theta_) {
  TrapezoidClass c;
  c.r = r_;
  c.theta = theta_;
  return c;
}

PointPair f_forward(double r, PointPair p) {
  double q = std::sqrt(r * (1.0 - r));
  return {(1.0 - r) * p.z + r * p.w, q * (p.z - p.w)};
}

PointPair f_inverse(double r, PointPair p) {
  double q = std::sqrt(r * (1.0 - r));
  return {p.z + (r / q) * p.w, p.z - ((1.0 - r) / q) * p.w};
}

PointPair g_map(const TrapezoidClass& cls, PointPair p) {
  Point c = (1.0 - cls.r) * p.z + cls.r * p.w;
  Point rot = std::polar(1.0, -cls.theta);
  return {c + rot * (p.z - c), c + rot * (p.w - c)};
}

PointPair g_map_via_matrices(const TrapezoidClass& cls, PointPair p) {
  PointPair uv = f_forward(cls.r, p);
  uv.w *= std::polar(1.0, -cls.theta);
  return f_inverse(cls.r, uv);
}

GMapCoefficients g_map_coefficients(double r, double theta) {
  Point rot = std::polar(1.0, -theta);
  return {(1.0 - r) + r * rot, r * (1.0 - rot), (1.0 - r) * (1.0 - rot), r + (1.0 - r) * rot};
}

double hamiltonian(const TrapezoidClass& cls, PointPair p) {
  return 0.5 * cls.theta * cls.r * (1.0 - cls.r) * norm2(p.z - p.w);
}

PointPair flow(const TrapezoidClass& cls, double t, PointPair p) {
  if (t == 0.0) return p;
  Point c = (1.0 - cls.r) * p.z + cls.r * p.w;
  Point rot = std::polar(1.0, -t * cls.theta);
  return {c + rot * (p.z - c), c + rot * (p.w - c)};
}

namespace {

// real 2x2 block of multiplication by a complex number
void put_block(Mat4& m, int bi, int bj, Point a) {
  m[2 * bi][2 * bj] = a.real();
  m[2 * bi][2 * bj + 1] = -a.imag();
  m[2 * bi + 1][2 * bj] = a.imag();
  m[2 * bi + 1][2 * bj + 1] = a.real();
}

}  // namespace

Mat4 g_map_jacobian(const TrapezoidClass& cls) {
  GMapCoefficients k = g_map_coefficients(cls.r, cls.theta);
  Mat4 m{};
  put_block(m, 0, 0, k.a);
  put_block(m, 0, 1, k.b);
  put_block(m, 1, 0, k.c);
  put_block(m, 1, 1, k.d);
  return m;
}

Mat4 symplectic_form_matrix(double r) {
  Mat4 m{};
  m[0][1] = 1.0 - r;
  m[1][0] = -(1.0 - r);
  m[2][3] = r;
  m[3][2] = -r;
  return m;
}

double symplectic_defect(const TrapezoidClass& cls) {
  Mat4 j = g_map_jacobian(cls);
  Mat4 omega = symplectic_form_matrix(cls.r);
  double worst = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double acc = 0.0;
      for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) acc += j[i][a] * omega[i][k] * j[k][b];
      worst = std::max(worst, std::abs(acc - omega[a][b]));
    }
  return worst;
}

}  // namespace trapeze
