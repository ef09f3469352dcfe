#include "trapeze/binormals.hpp"

#include <algorithm>
#include <cmath>

#include "trapeze/errors.hpp"

namespace trapeze {

namespace {

struct Sys {
  const JordanCurve& c;
  // g1 = (gamma(s)-gamma(t)) . gamma'(s), g2 = (gamma(s)-gamma(t)) . gamma'(t)
  void eval(double s, double t, double* g1, double* g2) const {
    Point d = c.eval(s) - c.eval(t);
    *g1 = dot(d, c.derivative(s));
    *g2 = dot(d, c.derivative(t));
  }
  void jacobian(double s, double t, double J[2][2]) const {
    Point d = c.eval(s) - c.eval(t);
    Point ds = c.derivative(s), dt = c.derivative(t);
    Point dss = c.second_derivative(s), dtt = c.second_derivative(t);
    J[0][0] = norm2(ds) + dot(d, dss);
    J[0][1] = -dot(dt, ds);
    J[1][0] = dot(ds, dt);
    J[1][1] = -norm2(dt) + dot(d, dtt);
  }
};

bool solve2(const double J[2][2], double r1, double r2, double* dx, double* dy) {
  double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
  double scale = std::abs(J[0][0]) + std::abs(J[0][1]) + std::abs(J[1][0]) + std::abs(J[1][1]);
  if (std::abs(det) < 1e-14 * scale * scale) return false;
  *dx = (r1 * J[1][1] - r2 * J[0][1]) / det;
  *dy = (J[0][0] * r2 - J[1][0] * r1) / det;
  return true;
}

// smallest/largest singular values of a 2x2 matrix
void singular_values(const double J[2][2], double* smin, double* smax) {
  double a = J[0][0], b = J[0][1], c = J[1][0], d = J[1][1];
  double q = a * a + b * b + c * c + d * d;
  double det = a * d - b * c;
  double disc = std::sqrt(std::max(0.0, q * q - 4.0 * det * det));
  *smax = std::sqrt(std::max(0.0, 0.5 * (q + disc)));
  *smin = std::sqrt(std::max(0.0, 0.5 * (q - disc)));
}

}  // namespace

BinormalSet binormals(const JordanCurve& curve) {
  if (!curve.smooth())
    throw Error(ErrorCode::DomainError, "binormals need a smooth curve");
  Sys sys{curve};
  const double diag_gap = 0.02;
  std::vector<std::pair<double, double>> found;
  std::vector<bool> rank_deficient;

  // seed only from local minima of |g1|^2+|g2|^2 over the cached table grid
  const int tn = curve.table_size();
  const int N = std::min(256, tn);
  const int stride = std::max(1, tn / N);
  const int gn = tn / stride;
  std::vector<double> norms((size_t)gn * gn, std::numeric_limits<double>::infinity());
  for (int i = 0; i < gn; ++i) {
    Point pi = curve.table_point(i * stride);
    Point di = curve.table_derivative(i * stride);
    for (int j = 0; j < gn; ++j) {
      if (param_dist((double)i / gn, (double)j / gn) < diag_gap) continue;
      Point d = pi - curve.table_point(j * stride);
      double g1 = dot(d, di);
      double g2 = dot(d, curve.table_derivative(j * stride));
      norms[(size_t)i * gn + j] = g1 * g1 + g2 * g2;
    }
  }
  std::vector<std::pair<int, int>> seeds;
  for (int i = 0; i < gn; ++i) {
    for (int j = 0; j < gn; ++j) {
      double v = norms[(size_t)i * gn + j];
      if (!std::isfinite(v)) continue;
      double up = norms[(size_t)((i + gn - 1) % gn) * gn + j];
      double dn = norms[(size_t)((i + 1) % gn) * gn + j];
      double lf = norms[(size_t)i * gn + (j + gn - 1) % gn];
      double rt = norms[(size_t)i * gn + (j + 1) % gn];
      if (v <= up && v <= dn && v <= lf && v <= rt) seeds.emplace_back(i, j);
    }
  }

  for (auto [si, sj] : seeds) {
      double s = (double)si / gn, t = (double)sj / gn;
      // Newton from this seed
      double g1, g2;
      sys.eval(s, t, &g1, &g2);
      bool ok = false;
      for (int it = 0; it < 40; ++it) {
        double J[2][2];
        sys.jacobian(s, t, J);
        double dx, dy;
        if (!solve2(J, g1, g2, &dx, &dy)) {
          // rank-deficient: least-squares step via normal equations with damping
          double a = J[0][0], b = J[0][1], c = J[1][0], d = J[1][1];
          double g = 1e-9 * (a * a + b * b + c * c + d * d) + 1e-300;
          double A = a * a + c * c + g, B = a * b + c * d, D = b * b + d * d + g;
          double r1 = a * g1 + c * g2, r2 = b * g1 + d * g2;
          double det = A * D - B * B;
          dx = (r1 * D - r2 * B) / det;
          dy = (A * r2 - B * r1) / det;
        }
        double lim = 0.5 / gn;
        double norm = std::max(std::abs(dx), std::abs(dy));
        if (norm > lim) {
          dx *= lim / norm;
          dy *= lim / norm;
        }
        s = wrap_param(s - dx);
        t = wrap_param(t - dy);
        if (param_dist(s, t) < diag_gap * 0.5) break;
        sys.eval(s, t, &g1, &g2);
        double scale = curve.diameter() * std::abs(curve.derivative(s));
        if (std::abs(g1) + std::abs(g2) < 1e-12 * scale) {
          ok = true;
          break;
        }
      }
      if (!ok) continue;
      if (param_dist(s, t) < diag_gap) continue;
      // normalize ordering (the system is symmetric under swap)
      if (t < s) std::swap(s, t);
      bool dup = false;
      for (auto& f : found)
        if (param_dist(f.first, s) < 1e-5 && param_dist(f.second, t) < 1e-5) {
          dup = true;
          break;
        }
      if (dup) continue;
      double J[2][2];
      sys.jacobian(s, t, J);
      double smin, smax;
      singular_values(J, &smin, &smax);
      found.emplace_back(s, t);
      rank_deficient.push_back(smin < 1e-6 * smax);
  }

  BinormalSet out;
  const double ang_tol = 1e-8;
  std::vector<Binormal> all;
  for (size_t i = 0; i < found.size(); ++i) {
    Binormal b;
    b.s1 = found[i].first;
    b.s2 = found[i].second;
    b.p1 = curve.eval(b.s1);
    b.p2 = curve.eval(b.s2);
    b.length = std::abs(b.p1 - b.p2);
    b.family = rank_deficient[i];
    Point chord = b.p2 - b.p1;
    double a1 = std::abs(dot(chord, curve.derivative(b.s1))) /
                (std::abs(chord) * std::abs(curve.derivative(b.s1)));
    double a2 = std::abs(dot(chord, curve.derivative(b.s2))) /
                (std::abs(chord) * std::abs(curve.derivative(b.s2)));
    if (std::asin(std::min(1.0, a1)) > ang_tol || std::asin(std::min(1.0, a2)) > ang_tol)
      continue;
    all.push_back(b);
  }
  std::sort(all.begin(), all.end(), [](const Binormal& a, const Binormal& b) {
    if (a.length != b.length) return a.length > b.length;
    return a.s1 < b.s1;
  });

  // collapse continuum families: members that are rank-deficient and share a
  // chord length are reported once
  std::vector<Binormal> kept;
  for (auto& b : all) {
    if (b.family) {
      bool merged = false;
      for (auto& k : kept)
        if (k.family && std::abs(k.length - b.length) < 1e-6 * curve.diameter()) {
          merged = true;
          break;
        }
      if (merged) continue;
      out.degenerate_family = true;
    }
    kept.push_back(b);
  }
  out.binormals = std::move(kept);
  return out;
}

}  // namespace trapeze
