#include "trapeze/action.hpp"

#include <cmath>

#include "trapeze/errors.hpp"
#include "trapeze/quadrature.hpp"

namespace trapeze {

namespace {

double route_integral_x_dy(const JordanCurve& curve, const std::vector<ParamArc>& route) {
  double acc = 0.0;
  for (const auto& arc : route) acc += curve.integral_x_dy(arc.start, arc.start + arc.delta);
  return acc;
}

PairMotion motion_for(const JordanCurve& curve, const Inscription& insc, bool allow_general,
                      bool* used_general) {
  *used_general = false;
  if (insc.kind == InscriptionKind::Elegant) {
    auto m = elegant_pair_motion(curve, insc.s1, insc.s1p, insc.s2, insc.s2p);
    if (m) return *m;
  } else if (insc.kind == InscriptionKind::AlmostElegant) {
    auto m = almost_elegant_pair_motion(curve, insc.s1, insc.s1p, insc.s2, insc.s2p);
    if (m) return *m;
  }
  if (!allow_general)
    throw Error(ErrorCode::ConstructionFailure, "capping recipe unavailable for this kind");
  *used_general = true;
  return general_pair_motion(curve, insc.s1, insc.s1p, insc.s2, insc.s2p);
}

PairPath build_capping(const JordanCurve& curve, const Inscription& insc, bool allow_general) {
  bool used_general = false;
  PairMotion motion = motion_for(curve, insc, allow_general, &used_general);
  PointPair start{insc.z(), insc.w()};
  PairPath path = materialize_pair_path(curve, insc.cls, motion, start);
  if (path.winding != 0) {
    if (!used_general && !allow_general)
      throw Error(ErrorCode::ConstructionFailure,
                  "recipe capping has nonzero winding " + std::to_string(path.winding));
    // winding-corrected concatenation
    append_full_wraps(motion, motion.end_param1(), motion.end_param2(), -path.winding);
    path = materialize_pair_path(curve, insc.cls, motion, start);
    path.used_corrector_loop = true;
    if (path.winding != 0)
      throw Error(ErrorCode::ConstructionFailure, "winding correction failed");
  }
  if (path.min_separation <= 1e-12 * curve.diameter())
    throw Error(ErrorCode::ConstructionFailure,
                "could not separate capping components; min separation " +
                    std::to_string(path.min_separation));
  return path;
}

ActionValue action_from_path(const JordanCurve& curve, const Inscription& insc,
                             const PairPath& path, bool analytic_trajectory) {
  const double r = insc.cls.r;
  const double theta = insc.cls.theta;
  const double L = insc.diag_length;
  Point center = (1.0 - r) * insc.z() + r * insc.w();

  double p1_int = route_integral_x_dy(curve, path.route1);
  double p2_int = route_integral_x_dy(curve, path.route2);
  double t1_int = analytic_trajectory ? trajectory_integral_analytic(center, insc.z(), theta)
                                      : trajectory_integral_numeric(center, insc.z(), theta);
  double t2_int = analytic_trajectory ? trajectory_integral_analytic(center, insc.w(), theta)
                                      : trajectory_integral_numeric(center, insc.w(), theta);

  ActionValue av;
  av.hamiltonian_term = 0.5 * theta * r * (1.0 - r) * L * L;
  // boundary orientation: p forward, trajectory backward
  av.capping_term = (1.0 - r) * (p1_int - t1_int) + r * (p2_int - t2_int);
  av.value = av.hamiltonian_term - av.capping_term;
  av.capping_winding = path.winding;
  av.min_separation = path.min_separation;
  av.used_corrector_loop = path.used_corrector_loop;
  return av;
}

}  // namespace

double trajectory_integral_numeric(Point center, Point start, double theta) {
  // q(t) = center + e^{-i t theta} (start - center); integral of x dy
  auto f = [&](double t) {
    Point rot = std::polar(1.0, -t * theta);
    Point q = center + rot * (start - center);
    Point dq = Point(0.0, -theta) * rot * (start - center);
    return q.real() * dq.imag();
  };
  return integrate_adaptive(f, 0.0, 1.0, 1e-12);
}

double trajectory_integral_analytic(Point center, Point start, double theta) {
  // along the circular arc of radius rho about center from angle a0 to a0-theta:
  // int x dy = cx rho (sin a1 - sin a0) + rho^2 [a/2 + sin(2a)/4]_{a0}^{a1}
  Point d = start - center;
  double rho = std::abs(d);
  if (rho == 0.0) return 0.0;
  double a0 = std::arg(d);
  double a1 = a0 - theta;
  double cx = center.real();
  auto F = [&](double a) { return cx * rho * std::sin(a) + rho * rho * (0.5 * a + 0.25 * std::sin(2.0 * a)); };
  return F(a1) - F(a0);
}

PairPath capping_path(const JordanCurve& curve, const Inscription& insc) {
  if (insc.kind == InscriptionKind::Other)
    throw Error(ErrorCode::WrongKind, "capping_path needs an elegant or almost-elegant kind");
  return build_capping(curve, insc, false);
}

PairPath capping_path_general(const JordanCurve& curve, const Inscription& insc) {
  bool used_general = false;
  PairMotion motion = general_pair_motion(curve, insc.s1, insc.s1p, insc.s2, insc.s2p);
  (void)used_general;
  PointPair start{insc.z(), insc.w()};
  PairPath path = materialize_pair_path(curve, insc.cls, motion, start);
  if (path.winding != 0) {
    append_full_wraps(motion, motion.end_param1(), motion.end_param2(), -path.winding);
    path = materialize_pair_path(curve, insc.cls, motion, start);
    path.used_corrector_loop = true;
    if (path.winding != 0)
      throw Error(ErrorCode::ConstructionFailure, "winding correction failed");
  }
  return path;
}

ActionValue action(const JordanCurve& curve, const Inscription& insc) {
  PairPath path = build_capping(curve, insc, insc.kind == InscriptionKind::Other);
  return action_from_path(curve, insc, path, /*analytic_trajectory=*/false);
}

ActionValue elegant_action(const JordanCurve& curve, const Inscription& insc) {
  if (insc.kind != InscriptionKind::Elegant)
    throw Error(ErrorCode::WrongKind, "inscription is not elegant");
  PairPath path = build_capping(curve, insc, false);
  ActionValue av = action_from_path(curve, insc, path, /*analytic_trajectory=*/true);
  const double r = insc.cls.r;
  const double theta = insc.cls.theta;
  const double L = insc.diag_length;
  Point center = (1.0 - r) * insc.z() + r * insc.w();
  av.A1 = 0.5 * theta * r * r * L * L;
  av.A2 = 0.5 * theta * (1.0 - r) * (1.0 - r) * L * L;
  av.A3 = route_integral_x_dy(curve, path.route1) -
          trajectory_integral_analytic(center, insc.z(), theta);
  av.A4 = route_integral_x_dy(curve, path.route2) -
          trajectory_integral_analytic(center, insc.w(), theta);
  // (1-r)(A1-A3) + r(A2-A4) equals H - capping because
  // (1-r) A1 + r A2 = 1/2 theta r (1-r) L^2
  av.value = (1.0 - r) * (*av.A1 - *av.A3) + r * (*av.A2 - *av.A4);
  return av;
}

ActionValue almost_elegant_action(const JordanCurve& curve, const Inscription& insc) {
  if (insc.kind != InscriptionKind::AlmostElegant)
    throw Error(ErrorCode::WrongKind, "inscription is not almost-elegant");
  PairPath path = build_capping(curve, insc, false);
  ActionValue av = action_from_path(curve, insc, path, /*analytic_trajectory=*/true);
  const double r = insc.cls.r;
  const double theta = insc.cls.theta;
  const double L = insc.diag_length;
  Point center = (1.0 - r) * insc.z() + r * insc.w();
  av.A1 = 0.5 * theta * r * r * L * L;
  av.A2 = 0.5 * theta * (1.0 - r) * (1.0 - r) * L * L;
  av.A3 = route_integral_x_dy(curve, path.route1) -
          trajectory_integral_analytic(center, insc.z(), theta);
  av.A4 = route_integral_x_dy(curve, path.route2) -
          trajectory_integral_analytic(center, insc.w(), theta);
  av.value = (1.0 - r) * (*av.A1 - *av.A3) + r * (*av.A2 - *av.A4);
  return av;
}

ActionValue action_with_winding_shift(const JordanCurve& curve, const Inscription& insc,
                                      int extra_winding) {
  bool used_general = false;
  PairMotion motion = motion_for(curve, insc, true, &used_general);
  PointPair start{insc.z(), insc.w()};
  PairPath base = materialize_pair_path(curve, insc.cls, motion, start);
  if (base.winding != 0)
    append_full_wraps(motion, motion.end_param1(), motion.end_param2(), -base.winding);
  append_full_wraps(motion, motion.end_param1(), motion.end_param2(), extra_winding);
  PairPath path = materialize_pair_path(curve, insc.cls, motion, start);
  ActionValue av = action_from_path(curve, insc, path, /*analytic_trajectory=*/false);
  av.capping_winding = path.winding;
  return av;
}

}  // namespace trapeze
