#include "trapeze/inscriber.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "trapeze/errors.hpp"
#include "trapeze/pair_path.hpp"

namespace trapeze {

const char* kind_name(InscriptionKind k) {
  switch (k) {
    case InscriptionKind::Elegant: return "elegant";
    case InscriptionKind::AlmostElegant: return "almost_elegant";
    case InscriptionKind::Other: return "other";
  }
  return "?";
}

double diagonal_exclusion(const JordanCurve& curve) { return 1e-3 * curve.diameter(); }

ResidualValue residual(const JordanCurve& curve, const TrapezoidClass& cls, double s1,
                       double s2) {
  PointPair zw{curve.eval(s1), curve.eval(s2)};
  PointPair img = g_map(cls, zw);
  Projection p1 = curve.project(img.z);
  Projection p2 = curve.project(img.w);
  return {p1.signed_distance, p2.signed_distance, p1.s, p2.s};
}

namespace {

// table-based distance to the curve (seeding only; no Newton polish)
double coarse_distance(const JordanCurve& curve, Point p) {
  const int n = curve.table_size();
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) best = std::min(best, norm2(curve.table_point(i) - p));
  return std::sqrt(best);
}

struct NewtonOutcome {
  bool converged = false;
  double s1 = 0.0, s2 = 0.0;
  ResidualValue res;
  double smin = 0.0, smax = 0.0;  // singular values of the final Jacobian
};

void jacobian(const JordanCurve& curve, const TrapezoidClass& cls, double s1, double s2,
              const ResidualValue& r, double J[2][2]) {
  GMapCoefficients k = g_map_coefficients(cls.r, cls.theta);
  Point d1 = curve.derivative(s1);
  Point d2 = curve.derivative(s2);
  // unit outward normals at the projection feet
  Point t1 = curve.derivative(r.s1p);
  Point t2 = curve.derivative(r.s2p);
  Point n1 = outward_normal(t1) / std::abs(t1);
  Point n2 = outward_normal(t2) / std::abs(t2);
  J[0][0] = dot(n1, k.a * d1);
  J[0][1] = dot(n1, k.b * d2);
  J[1][0] = dot(n2, k.c * d1);
  J[1][1] = dot(n2, k.d * d2);
}

void singular_values2(const double J[2][2], double* smin, double* smax) {
  double a = J[0][0], b = J[0][1], c = J[1][0], d = J[1][1];
  double q = a * a + b * b + c * c + d * d;
  double det = a * d - b * c;
  double disc = std::sqrt(std::max(0.0, q * q - 4.0 * det * det));
  *smax = std::sqrt(std::max(0.0, 0.5 * (q + disc)));
  *smin = std::sqrt(std::max(0.0, 0.5 * (q - disc)));
}

NewtonOutcome newton_run(const JordanCurve& curve, const TrapezoidClass& cls, double s1,
                         double s2, double tol) {
  NewtonOutcome out;
  ResidualValue r = residual(curve, cls, s1, s2);
  double f = r.d1 * r.d1 + r.d2 * r.d2;
  const double step_cap = 0.05;
  for (int it = 0; it < 50; ++it) {
    if (std::max(std::abs(r.d1), std::abs(r.d2)) < tol) {
      double J[2][2];
      jacobian(curve, cls, s1, s2, r, J);
      singular_values2(J, &out.smin, &out.smax);
      out.converged = true;
      out.s1 = wrap_param(s1);
      out.s2 = wrap_param(s2);
      out.res = r;
      return out;
    }
    double J[2][2];
    jacobian(curve, cls, s1, s2, r, J);
    double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
    double scale = std::abs(J[0][0]) + std::abs(J[0][1]) + std::abs(J[1][0]) + std::abs(J[1][1]);
    double dx, dy;
    if (std::abs(det) > 1e-12 * scale * scale) {
      dx = (r.d1 * J[1][1] - r.d2 * J[0][1]) / det;
      dy = (J[0][0] * r.d2 - J[1][0] * r.d1) / det;
    } else {
      // least-squares step (families make the Jacobian rank deficient)
      double g = 1e-10 * scale * scale + 1e-300;
      double A = J[0][0] * J[0][0] + J[1][0] * J[1][0] + g;
      double B = J[0][0] * J[0][1] + J[1][0] * J[1][1];
      double D = J[0][1] * J[0][1] + J[1][1] * J[1][1] + g;
      double r1 = J[0][0] * r.d1 + J[1][0] * r.d2;
      double r2 = J[0][1] * r.d1 + J[1][1] * r.d2;
      double dd = A * D - B * B;
      dx = (r1 * D - r2 * B) / dd;
      dy = (A * r2 - B * r1) / dd;
    }
    double nrm = std::max(std::abs(dx), std::abs(dy));
    if (nrm > step_cap) {
      dx *= step_cap / nrm;
      dy *= step_cap / nrm;
    }
    // Armijo backtracking on the squared residual norm
    double lambda = 1.0;
    bool accepted = false;
    for (int bt = 0; bt < 12; ++bt) {
      double c1 = s1 - lambda * dx;
      double c2 = s2 - lambda * dy;
      ResidualValue rc = residual(curve, cls, c1, c2);
      double fc = rc.d1 * rc.d1 + rc.d2 * rc.d2;
      if (fc < f * (1.0 - 1e-4 * lambda) || fc < tol * tol) {
        s1 = c1;
        s2 = c2;
        r = rc;
        f = fc;
        accepted = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!accepted) return out;
  }
  if (std::max(std::abs(r.d1), std::abs(r.d2)) < tol) {
    double J[2][2];
    jacobian(curve, cls, s1, s2, r, J);
    singular_values2(J, &out.smin, &out.smax);
    out.converged = true;
    out.s1 = wrap_param(s1);
    out.s2 = wrap_param(s2);
    out.res = r;
  }
  return out;
}

Inscription build_inscription(const JordanCurve& curve, const TrapezoidClass& cls,
                              const NewtonOutcome& n) {
  Inscription insc;
  insc.cls = cls;
  insc.s1 = n.s1;
  insc.s2 = n.s2;
  insc.s1p = n.res.s1p;
  insc.s2p = n.res.s2p;
  Point z = curve.eval(n.s1), w = curve.eval(n.s2);
  PointPair img = g_map(cls, {z, w});
  insc.vertices = {z, img.z, w, img.w};
  insc.diag_length = std::abs(z - w);
  insc.residual = std::max(std::abs(n.res.d1), std::abs(n.res.d2));
  insc.family = n.smin < 1e-6 * n.smax;
  return insc;
}

int hardware_threads() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : (int)n;
}

template <class F>
void parallel_for(int n, F&& body) {
  int nt = std::min(hardware_threads(), n);
  if (nt <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int t = 0; t < nt; ++t)
    pool.emplace_back([&]() {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= n) return;
        body(i);
      }
    });
  for (auto& th : pool) th.join();
}

FindResult find_inscriptions_polygon(const JordanCurve& curve, const TrapezoidClass& cls,
                                     const FindOptions& opts);

}  // namespace

std::optional<Inscription> polish_inscription(const JordanCurve& curve,
                                              const TrapezoidClass& cls, double s1, double s2,
                                              double tol_rel, bool do_classify) {
  NewtonOutcome n = newton_run(curve, cls, s1, s2, tol_rel * curve.diameter());
  if (!n.converged) return std::nullopt;
  Inscription insc = build_inscription(curve, cls, n);
  if (insc.diag_length <= diagonal_exclusion(curve)) return std::nullopt;
  if (do_classify) classify(curve, insc);
  return insc;
}

FindResult find_inscriptions(const JordanCurve& curve, const TrapezoidClass& cls,
                             const FindOptions& opts) {
  if (opts.grid_n < 32) throw Error(ErrorCode::DomainError, "grid_n must be >= 32");
  if (curve.kind() == CurveKind::Polygon) return find_inscriptions_polygon(curve, cls, opts);

  const int n = opts.grid_n;
  const double tol = opts.tol_rel * curve.diameter();
  const double delta = diagonal_exclusion(curve);

  // residual-norm landscape on the seeding grid (table distances, cheap)
  std::vector<double> norms(n * n, std::numeric_limits<double>::infinity());
  parallel_for(n, [&](int i) {
    double s1 = (double)i / n;
    Point z = curve.eval(s1);
    for (int j = 0; j < n; ++j) {
      double s2 = (double)j / n;
      Point w = curve.eval(s2);
      if (std::abs(z - w) <= delta) continue;
      PointPair img = g_map(cls, {z, w});
      double d1 = coarse_distance(curve, img.z);
      double d2 = coarse_distance(curve, img.w);
      norms[i * n + j] = d1 * d1 + d2 * d2;
    }
  });

  // local minima of the landscape (4-neighborhood, torus wrap)
  std::vector<std::pair<double, int>> seeds;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double v = norms[i * n + j];
      if (!std::isfinite(v)) continue;
      double up = norms[((i + n - 1) % n) * n + j];
      double dn = norms[((i + 1) % n) * n + j];
      double lf = norms[i * n + (j + n - 1) % n];
      double rt = norms[i * n + (j + 1) % n];
      if (v <= up && v <= dn && v <= lf && v <= rt) seeds.emplace_back(v, i * n + j);
    }
  }
  std::sort(seeds.begin(), seeds.end());
  if ((int)seeds.size() > opts.max_seeds) seeds.resize(opts.max_seeds);

  std::vector<NewtonOutcome> outcomes(seeds.size());
  parallel_for((int)seeds.size(), [&](int k) {
    int idx = seeds[k].second;
    double s1 = (double)(idx / n) / n;
    double s2 = (double)(idx % n) / n;
    outcomes[k] = newton_run(curve, cls, s1, s2, tol);
  });

  FindResult result;
  std::vector<Inscription> kept;
  int diverged = 0;
  for (const auto& o : outcomes) {
    if (!o.converged) {
      ++diverged;
      continue;
    }
    Inscription insc = build_inscription(curve, cls, o);
    if (insc.diag_length <= delta) continue;
    bool dup = false;
    for (const auto& other : kept)
      if (param_dist(other.s1, insc.s1) < 1e-6 && param_dist(other.s2, insc.s2) < 1e-6) {
        dup = true;
        break;
      }
    if (!dup) kept.push_back(insc);
  }
  result.newton_divergences = diverged;

  // collapse 1-parameter families to representatives
  std::vector<Inscription> final_list;
  for (auto& insc : kept) {
    if (insc.family) {
      result.family = true;
      bool merged = false;
      for (auto& f : final_list)
        if (f.family && std::abs(f.diag_length - insc.diag_length) < 1e-6 * curve.diameter()) {
          if (std::make_pair(insc.s1, insc.s2) < std::make_pair(f.s1, f.s2)) f = insc;
          merged = true;
          break;
        }
      if (merged) continue;
    }
    final_list.push_back(insc);
  }

  if (opts.classify)
    for (auto& insc : final_list) classify(curve, insc);

  std::sort(final_list.begin(), final_list.end(), [](const Inscription& a, const Inscription& b) {
    if (a.s1 != b.s1) return a.s1 < b.s1;
    return a.s2 < b.s2;
  });
  result.inscriptions = std::move(final_list);
  result.none_found = result.inscriptions.empty();
  return result;
}

namespace {

FindResult find_inscriptions_polygon(const JordanCurve& curve, const TrapezoidClass& cls,
                                     const FindOptions& opts) {
  // per-edge-pair closed-form solves: with z on edge (a0,a1) and w on edge
  // (b0,b1), z' and w' are affine in the edge parameters; requiring them on
  // the support lines of a target edge pair is a 2x2 linear system
  const auto& verts = curve.polygon_vertices();
  const int m = (int)verts.size();
  const double delta = diagonal_exclusion(curve);
  const double tol = opts.tol_rel * curve.diameter();
  GMapCoefficients co = g_map_coefficients(cls.r, cls.theta);

  auto edge = [&](int e) -> std::pair<Point, Point> {
    return {verts[e], verts[(e + 1) % m]};
  };

  std::vector<Inscription> kept;
  for (int ea = 0; ea < m; ++ea) {
    auto [a0, a1] = edge(ea);
    Point ua = a1 - a0;
    for (int eb = 0; eb < m; ++eb) {
      auto [b0, b1] = edge(eb);
      Point ub = b1 - b0;
      // z = a0 + t ua, w = b0 + u ub;  z' = co.a z + co.b w;  w' = co.c z + co.d w
      for (int ec = 0; ec < m; ++ec) {
        auto [c0, c1] = edge(ec);
        Point uc = c1 - c0;
        for (int ed = 0; ed < m; ++ed) {
          auto [d0, d1] = edge(ed);
          Point ud = d1 - d0;
          // cross(z' - c0, uc) = 0 and cross(w' - d0, ud) = 0
          Point zc = co.a * a0 + co.b * b0 - c0;
          Point wc = co.c * a0 + co.d * b0 - d0;
          double A11 = cross(co.a * ua, uc), A12 = cross(co.b * ub, uc);
          double A21 = cross(co.c * ua, ud), A22 = cross(co.d * ub, ud);
          double r1 = -cross(zc, uc), r2 = -cross(wc, ud);
          double det = A11 * A22 - A12 * A21;
          double sc = std::abs(A11) + std::abs(A12) + std::abs(A21) + std::abs(A22);
          if (std::abs(det) < 1e-14 * sc * sc) continue;
          double t = (r1 * A22 - r2 * A12) / det;
          double u = (A11 * r2 - A21 * r1) / det;
          const double eps = 1e-12;
          if (t < -eps || t > 1.0 + eps || u < -eps || u > 1.0 + eps) continue;
          Point z = a0 + t * ua, w = b0 + u * ub;
          if (std::abs(z - w) <= delta) continue;
          PointPair img = g_map(cls, {z, w});
          double tc = dot(img.z - c0, uc) / norm2(uc);
          double td = dot(img.w - d0, ud) / norm2(ud);
          if (tc < -eps || tc > 1.0 + eps || td < -eps || td > 1.0 + eps) continue;
          if (std::abs(img.z - (c0 + tc * uc)) > tol) continue;
          if (std::abs(img.w - (d0 + td * ud)) > tol) continue;

          Projection pz = curve.project(z);
          Projection pw = curve.project(w);
          ResidualValue r = residual(curve, cls, pz.s, pw.s);
          Inscription insc;
          insc.cls = cls;
          insc.s1 = pz.s;
          insc.s2 = pw.s;
          insc.s1p = r.s1p;
          insc.s2p = r.s2p;
          insc.vertices = {z, img.z, w, img.w};
          insc.diag_length = std::abs(z - w);
          insc.residual = std::max(std::abs(r.d1), std::abs(r.d2));
          if (insc.residual > tol) continue;
          bool dup = false;
          for (const auto& other : kept)
            if (param_dist(other.s1, insc.s1) < 1e-6 && param_dist(other.s2, insc.s2) < 1e-6) {
              dup = true;
              break;
            }
          if (!dup) kept.push_back(insc);
        }
      }
    }
  }

  FindResult result;
  // polygons can carry edge-sliding families (e.g. squares in squares)
  std::vector<Inscription> final_list;
  for (auto& insc : kept) final_list.push_back(insc);
  if (opts.classify)
    for (auto& insc : final_list) classify(curve, insc);
  std::sort(final_list.begin(), final_list.end(), [](const Inscription& a, const Inscription& b) {
    if (a.s1 != b.s1) return a.s1 < b.s1;
    return a.s2 < b.s2;
  });
  result.inscriptions = std::move(final_list);
  result.none_found = result.inscriptions.empty();
  return result;
}

}  // namespace

InscriptionKind classify(const JordanCurve& curve, Inscription& insc) {
  insc.rectangle_ambiguity = insc.cls.r == 0.5;
  auto winding_ok = [&](const std::optional<PairMotion>& motion) {
    if (!motion) return false;
    PairPath path = materialize_pair_path(curve, insc.cls, *motion, {insc.z(), insc.w()});
    return path.winding == 0;
  };
  auto elegant = elegant_pair_motion(curve, insc.s1, insc.s1p, insc.s2, insc.s2p);
  if (winding_ok(elegant)) {
    insc.kind = InscriptionKind::Elegant;
    return insc.kind;
  }
  if (!insc.rectangle_ambiguity) {
    auto almost = almost_elegant_pair_motion(curve, insc.s1, insc.s1p, insc.s2, insc.s2p);
    if (winding_ok(almost)) {
      insc.kind = InscriptionKind::AlmostElegant;
      return insc.kind;
    }
  }
  insc.kind = InscriptionKind::Other;
  return insc.kind;
}

WidthReport width(const JordanCurve& curve, const TrapezoidClass& cls,
                  const WidthOptions& opts) {
  FindOptions fo;
  fo.grid_n = opts.grid_n;
  fo.classify = false;

  auto width_at = [&](double phi) -> double {
    FindResult r = find_inscriptions(curve, TrapezoidClass(cls.r, phi), fo);
    if (r.none_found)
      throw Error(ErrorCode::NoInscriptionFound,
                  "no inscription at phi = " + std::to_string(phi));
    double best = std::numeric_limits<double>::infinity();
    for (const auto& insc : r.inscriptions) best = std::min(best, insc.diag_length);
    return best;
  };

  WidthReport rep;
  rep.width = width_at(cls.theta);
  rep.theta_width = rep.width;
  rep.minimizing_phi = cls.theta;
  if (!opts.compute_theta_width) return rep;

  std::vector<double> phis, vals;
  for (int i = 1; i <= opts.phi_grid; ++i) {
    double phi = cls.theta * (double)i / opts.phi_grid;
    phis.push_back(phi);
    vals.push_back(i == opts.phi_grid ? rep.width : width_at(phi));
  }
  int best = (int)(std::min_element(vals.begin(), vals.end()) - vals.begin());
  rep.theta_width = vals[best];
  rep.minimizing_phi = phis[best];

  // golden-section refinement around the grid minimizer
  double lo = phis[std::max(0, best - 1)];
  double hi = phis[std::min((int)phis.size() - 1, best + 1)];
  if (hi > lo) {
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    double f1 = width_at(x1), f2 = width_at(x2);
    for (int it = 0; it < opts.refine_iters; ++it) {
      if (f1 < f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - g * (hi - lo);
        f1 = width_at(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + g * (hi - lo);
        f2 = width_at(x2);
      }
    }
    double phi = f1 < f2 ? x1 : x2;
    double val = std::min(f1, f2);
    if (val < rep.theta_width) {
      rep.theta_width = val;
      rep.minimizing_phi = phi;
    }
  }
  rep.theta_width = std::min(rep.theta_width, rep.width);
  return rep;
}

}  // namespace trapeze
