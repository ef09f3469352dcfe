#include "trapeze/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "trapeze/errors.hpp"

namespace trapeze {

const char* branch_end_name(BranchEnd e) {
  switch (e) {
    case BranchEnd::RangeEnd: return "range_end";
    case BranchEnd::Shrinkout: return "shrinkout";
    case BranchEnd::Quadrisecant: return "quadrisecant";
    case BranchEnd::Fold: return "fold";
    case BranchEnd::StepCollapse: return "step_collapse";
  }
  return "?";
}

ActionSpectrum spectrum(const JordanCurve& curve, const TrapezoidClass& cls, int grid_n) {
  FindOptions fo;
  fo.grid_n = grid_n;
  FindResult fr = find_inscriptions(curve, cls, fo);
  ActionSpectrum sp;
  sp.cls = cls;
  sp.family = fr.family;
  sp.none_found = fr.none_found;
  for (const auto& insc : fr.inscriptions) sp.entries.push_back({insc, action(curve, insc)});
  std::sort(sp.entries.begin(), sp.entries.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    return a.action.value < b.action.value;
  });
  return sp;
}

namespace {

// collinearity of the four vertices: smallest singular value of the centered
// 4x2 vertex matrix
double collinearity(const std::array<Point, 4>& v) {
  Point mean = (v[0] + v[1] + v[2] + v[3]) / 4.0;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& p : v) {
    Point d = p - mean;
    sxx += d.real() * d.real();
    sxy += d.real() * d.imag();
    syy += d.imag() * d.imag();
  }
  double tr = sxx + syy;
  double det = sxx * syy - sxy * sxy;
  double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
  double lambda_min = 0.5 * (tr - disc);
  return std::sqrt(std::max(0.0, lambda_min));
}

double min_pairwise(const std::array<Point, 4>& v) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) best = std::min(best, std::abs(v[i] - v[j]));
  return best;
}

// polynomial extrapolation to x = 0 through (x_i, y_i) (Neville)
double extrapolate_to_zero(std::vector<double> x, std::vector<double> y) {
  size_t n = x.size();
  for (size_t m = 1; m < n; ++m)
    for (size_t i = 0; i + m < n; ++i)
      y[i] = ((0.0 - x[i + m]) * y[i] + (x[i] - 0.0) * y[i + 1]) / (x[i] - x[i + m]);
  return y[0];
}

}  // namespace

Branch continue_branch(const JordanCurve& curve, double r, double theta_start, double theta_end,
                       const Inscription& seed, const StepControl& ctrl) {
  Branch branch;
  branch.r = r;
  const double delta = diagonal_exclusion(curve);
  const double rad2 = curve.radius() * curve.radius();
  const double slope_bound = 2.0 * r * (1.0 - r) * rad2;
  const int dir = theta_end >= theta_start ? +1 : -1;

  auto solve_at = [&](double theta, double s1, double s2) {
    return polish_inscription(curve, TrapezoidClass::unchecked(r, theta), s1, s2, 1e-10, false);
  };

  auto seed_check = solve_at(theta_start, seed.s1, seed.s2);
  if (!seed_check) throw Error(ErrorCode::SeedInvalid, "seed does not solve at theta_start");
  {
    BranchSample s0;
    s0.theta = theta_start;
    s0.inscription = *seed_check;
    classify(curve, s0.inscription);
    s0.action = action(curve, s0.inscription).value;
    branch.samples.push_back(s0);
  }

  double step = std::min(ctrl.initial, std::abs(theta_end - theta_start));
  double theta = theta_start;
  double last_recorded = theta_start;

  auto finish_shrinkout = [&](const Inscription& insc) {
    branch.end = BranchEnd::Shrinkout;
    Point c = 0.0;
    for (const auto& v : insc.vertices) c += v;
    branch.limit_point = c / 4.0;
    // Richardson extrapolation of the action in (pi - theta) over the last
    // samples
    std::vector<double> xs, ys;
    int n = (int)branch.samples.size();
    for (int i = std::max(0, n - 5); i < n; ++i) {
      xs.push_back(kPi - branch.samples[i].theta);
      ys.push_back(branch.samples[i].action);
    }
    branch.limit_action = xs.size() >= 2 ? extrapolate_to_zero(xs, ys) : ys.back();
  };

  while ((theta_end - theta) * dir > 1e-12) {
    double theta_next = theta + dir * step;
    if ((theta_end - theta_next) * dir < 0.0) theta_next = theta_end;

    // secant predictor
    double p1, p2;
    int n = (int)branch.samples.size();
    if (n >= 2) {
      const auto& a = branch.samples[n - 2];
      const auto& b = branch.samples[n - 1];
      double dth = b.theta - a.theta;
      double f = dth != 0.0 ? (theta_next - b.theta) / dth : 0.0;
      p1 = b.inscription.s1 + f * param_diff(b.inscription.s1, a.inscription.s1);
      p2 = b.inscription.s2 + f * param_diff(b.inscription.s2, a.inscription.s2);
    } else {
      p1 = branch.samples.back().inscription.s1;
      p2 = branch.samples.back().inscription.s2;
    }

    auto corrected = solve_at(theta_next, p1, p2);
    bool track_jump = false;
    if (corrected) {
      // reject correction onto a different branch
      const auto& prev = branch.samples.back().inscription;
      double moved = std::max(param_dist(corrected->s1, prev.s1), param_dist(corrected->s2, prev.s2));
      double predicted = std::max(param_dist(wrap_param(p1), prev.s1), param_dist(wrap_param(p2), prev.s2));
      if (moved > std::max(0.08, 6.0 * predicted + 0.02)) track_jump = true;
    }
    if (!corrected || track_jump) {
      step *= 0.5;
      if (step < ctrl.min_step) {
        // shrinkout can pin the corrector before the diagonal gate fires
        if (branch.samples.back().inscription.diag_length < 10.0 * delta &&
            std::abs(kPi - theta) < 0.2) {
          finish_shrinkout(branch.samples.back().inscription);
          return branch;
        }
        branch.end = BranchEnd::Fold;
        branch.theta_fold = theta;
        return branch;
      }
      continue;
    }

    Inscription insc = *corrected;
    if (insc.diag_length < std::max(delta, 0.0)) {
      finish_shrinkout(insc);
      return branch;
    }

    classify(curve, insc);
    BranchSample sample;
    sample.theta = theta_next;
    sample.inscription = insc;
    sample.action = action(curve, insc).value;

    double dact = std::abs(sample.action - branch.samples.back().action);
    double dth = std::abs(theta_next - branch.samples.back().theta);
    if (dact > slope_bound * dth + 1e-6) ++branch.variation_violations;

    bool record = ctrl.record_every <= 0.0 ||
                  std::abs(theta_next - last_recorded) >= ctrl.record_every ||
                  theta_next == theta_end;
    if (record) last_recorded = theta_next;
    branch.samples.push_back(sample);
    if (!record && branch.samples.size() > 2) {
      // keep the sample count bounded when a recording cadence is set
      auto& v = branch.samples;
      if (!v[v.size() - 2].heuristic_jump &&
          std::abs(v[v.size() - 2].theta - last_recorded) > 1e-15 &&
          v[v.size() - 2].theta != theta_start)
        v.erase(v.end() - 2);
    }

    // quadrisecant: four collinear, pairwise-separated vertices
    if (collinearity(insc.vertices) < 1e-7 * curve.diameter() &&
        min_pairwise(insc.vertices) > delta) {
      branch.end = BranchEnd::Quadrisecant;
      branch.quadrisecant_points = insc.vertices;
      std::vector<double> xs, ys;
      int m = (int)branch.samples.size();
      for (int i = std::max(0, m - 5); i < m; ++i) {
        xs.push_back(kPi - branch.samples[i].theta);
        ys.push_back(branch.samples[i].action);
      }
      branch.limit_action = extrapolate_to_zero(xs, ys);
      return branch;
    }

    theta = theta_next;
    step = std::min(step * 1.5, ctrl.max_step);
  }
  branch.end = BranchEnd::RangeEnd;
  return branch;
}

SpectralProxy l2_proxy(const JordanCurve& curve, double r,
                       const std::vector<double>& theta_grid) {
  if (theta_grid.empty()) throw Error(ErrorCode::DomainError, "empty theta grid");
  std::vector<double> grid = theta_grid;
  std::sort(grid.begin(), grid.end());
  if (grid.front() <= 0.0 || grid.back() >= kPi)
    throw Error(ErrorCode::DomainError, "theta grid must lie in (0, pi)");

  BinormalSet bset = binormals(curve);
  if (bset.binormals.empty())
    throw Error(ErrorCode::ProxyUnavailable, "no binormal to seed the branch");
  const Binormal& longest = bset.binormals.front();

  SpectralProxy proxy;
  proxy.r = r;
  proxy.theta_grid = grid;
  proxy.provenance = "longest-binormal branch, length " + std::to_string(longest.length);

  // seed the branch near theta -> 0 at the longest binormal
  double theta0 = std::min(1e-3, grid.front());
  auto seed = polish_inscription(curve, TrapezoidClass::unchecked(r, theta0), longest.s1,
                                 longest.s2, 1e-10, false);
  if (!seed)
    throw Error(ErrorCode::ProxyUnavailable,
                "no inscription branch connects to the longest binormal");

  const double rad2 = curve.radius() * curve.radius();
  const double slope_bound = 2.0 * r * (1.0 - r) * rad2;

  double cur_theta = theta0;
  Inscription cur = *seed;
  double last_value = -std::numeric_limits<double>::infinity();

  for (double th : grid) {
    bool heuristic = false;
    if (th > cur_theta) {
      // walk adaptively to the next grid angle
      double step = std::min(0.02, th - cur_theta);
      while (th - cur_theta > 1e-12) {
        double target = std::min(th, cur_theta + step);
        auto next = polish_inscription(curve, TrapezoidClass::unchecked(r, target), cur.s1,
                                       cur.s2, 1e-10, false);
        if (next && next->diag_length > diagonal_exclusion(curve)) {
          cur = *next;
          cur_theta = target;
          step = std::min(step * 1.5, 0.05);
        } else {
          step *= 0.5;
          if (step < 1e-9) break;
        }
      }
    }
    double value;
    if (std::abs(cur_theta - th) <= 1e-12) {
      value = action(curve, cur).value;
    } else {
      // branch lost: fall back to the spectrum value closest to the last one
      ActionSpectrum sp = spectrum(curve, TrapezoidClass::unchecked(r, th), 96);
      if (sp.entries.empty())
        throw Error(ErrorCode::ProxyUnavailable,
                    "branch lost and spectrum empty at theta = " + std::to_string(th));
      double best = sp.entries.front().action.value;
      for (const auto& e : sp.entries)
        if (std::abs(e.action.value - last_value) < std::abs(best - last_value))
          best = e.action.value;
      value = best;
      heuristic = true;
      // re-anchor the branch
      for (const auto& e : sp.entries)
        if (e.action.value == value) {
          cur = e.inscription;
          cur_theta = th;
          break;
        }
    }
    if (!proxy.l2_values.empty()) {
      double dth = th - proxy.theta_grid[proxy.l2_values.size() - 1];
      double dv = value - last_value;
      if (dv <= 0.0) proxy.monotone = false;
      if (dv > slope_bound * dth + 1e-6) ++proxy.slope_violations;
    }
    proxy.l2_values.push_back(value);
    proxy.heuristic.push_back(heuristic);
    last_value = value;
  }
  return proxy;
}

TriangleReport check_triangle(const SpectralProxy& proxy, double area) {
  TriangleReport rep;
  const auto& g = proxy.theta_grid;
  const auto& v = proxy.l2_values;
  const double tol = 1e-6 * area;
  for (size_t i = 0; i < g.size(); ++i) {
    for (size_t j = i; j < g.size(); ++j) {
      double sum = g[i] + g[j];
      if (sum > kPi + 1e-12) continue;
      // locate sum on the grid
      size_t k = g.size();
      for (size_t m = 0; m < g.size(); ++m)
        if (std::abs(g[m] - sum) < 1e-9) {
          k = m;
          break;
        }
      if (k == g.size()) continue;
      ++rep.pairs_checked;
      double excess = v[k] - (v[i] + v[j]) - tol;
      if (excess > 0.0) {
        ++rep.violations;
        rep.violating.push_back({g[i], g[j], excess});
      }
    }
  }
  return rep;
}

double max_turn_angle(double r, double theta) {
  if (!(r > 0.0 && r <= 0.5)) throw Error(ErrorCode::DomainError, "r must lie in (0, 1/2]");
  if (!(theta > 0.0 && theta < kPi))
    throw Error(ErrorCode::DomainError, "theta must lie in (0, pi)");
  if (r == 0.5) return 0.5 * kPi;  // by continuity
  return std::atan(1.0 / ((1.0 - 2.0 * r) * std::tan(0.5 * theta)));
}

double elegance_threshold(double r, double K) {
  if (!(r > 0.0 && r < 0.5)) throw Error(ErrorCode::DomainError, "r must lie in (0, 1/2)");
  if (!(K > 0.0)) throw Error(ErrorCode::DomainError, "K must be positive");
  return kPi - 2.0 * std::atan((1.0 - 2.0 * r) / K);
}

std::vector<double> shrinkout_limits(const JordanCurve& curve, double r) {
  double area = curve.area();
  return {0.0, r * area, (1.0 - r) * area};
}

ShrinkoutMatch match_shrinkout_limit(const JordanCurve& curve, double r, double limit_action) {
  double area = curve.area();
  double x = limit_action - area * std::floor(limit_action / area);  // mod area
  ShrinkoutMatch m;
  m.distance = std::numeric_limits<double>::infinity();
  for (double target : shrinkout_limits(curve, r)) {
    for (double cand : {target, target + area, target - area}) {
      double d = std::abs(x - cand);
      if (d < m.distance) {
        m.distance = d;
        m.nearest = target;
      }
    }
  }
  m.matched = m.distance < 0.01 * area;
  return m;
}

DualityReport quadrisecant_duality(const JordanCurve& curve, const Branch& plus,
                                   const Branch& minus) {
  if (plus.end != BranchEnd::Quadrisecant || minus.end != BranchEnd::Quadrisecant)
    throw Error(ErrorCode::MismatchedQuadrisecants, "both branches must end in quadrisecants");
  // vertex sets must match within 1e-6 * diameter
  const double tol = 1e-6 * curve.diameter();
  for (const auto& p : plus.quadrisecant_points) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : minus.quadrisecant_points) best = std::min(best, std::abs(p - q));
    if (best > tol)
      throw Error(ErrorCode::MismatchedQuadrisecants,
                  "quadrisecant vertex sets differ by " + std::to_string(best));
  }
  DualityReport rep;
  rep.area = curve.area();
  rep.action_sum = plus.limit_action + minus.limit_action;
  rep.residual = std::abs(rep.action_sum - rep.area);
  rep.pass = rep.residual < 0.01 * rep.area;
  return rep;
}

std::vector<double> curvature_derivative_roots(const JordanCurve& curve, int scan_n) {
  if (!curve.smooth())
    throw Error(ErrorCode::DomainError, "curvature roots need a smooth curve");
  std::vector<double> roots;
  double prev = curve.curvature_derivative(0.0);
  for (int i = 1; i <= scan_n; ++i) {
    double s = (double)i / scan_n;
    double cur = curve.curvature_derivative(s);
    if (prev == 0.0) roots.push_back((double)(i - 1) / scan_n);
    if (prev * cur < 0.0) {
      double lo = (double)(i - 1) / scan_n, hi = s;
      double flo = prev;
      for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = curve.curvature_derivative(mid);
        if (flo * fm <= 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev = cur;
  }
  return roots;
}

VertexReport vertex_check(const JordanCurve& curve, const Branch& shrink_branch) {
  if (shrink_branch.end != BranchEnd::Shrinkout)
    throw Error(ErrorCode::DomainError, "vertex check needs a shrinkout branch");
  VertexReport rep;
  Projection proj = curve.project(shrink_branch.limit_point);
  rep.limit_param = proj.s;
  rep.curvature_derivative = curve.curvature_derivative(proj.s);

  // scale of curvature variation over the curve
  double max_kd = 0.0, max_k = 0.0;
  const int n = 1024;
  for (int i = 0; i < n; ++i) {
    max_kd = std::max(max_kd, std::abs(curve.curvature_derivative((double)i / n)));
    max_k = std::max(max_k, std::abs(curve.curvature((double)i / n)));
  }
  if (max_kd <= 1e-9 * max_k) {
    rep.vacuous = true;  // constant curvature
    rep.pass = true;
    rep.nearest_root = proj.s;
    rep.root_distance = 0.0;
    return rep;
  }
  std::vector<double> roots = curvature_derivative_roots(curve);
  rep.root_distance = std::numeric_limits<double>::infinity();
  for (double root : roots) {
    double d = param_dist(proj.s, root);
    if (d < rep.root_distance) {
      rep.root_distance = d;
      rep.nearest_root = root;
    }
  }
  rep.pass = rep.root_distance <= 1e-3 || std::abs(rep.curvature_derivative) <= 1e-3 * max_kd;
  return rep;
}

}  // namespace trapeze
