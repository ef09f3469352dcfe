#pragma once

#include <optional>

#include "trapeze/inscriber.hpp"
#include "trapeze/pair_path.hpp"

namespace trapeze {

struct ActionValue {
  double value = 0.0;
  double hamiltonian_term = 0.0;
  double capping_term = 0.0;
  // cone and arc areas where the closed forms apply
  std::optional<double> A1, A2, A3, A4;
  int capping_winding = 0;
  double min_separation = 0.0;
  bool used_corrector_loop = false;
};

// capping path for elegant / almost-elegant inscriptions (the recipe arcs)
PairPath capping_path(const JordanCurve& curve, const Inscription& insc);
// zero-winding capping for any kind, found by winding-corrected arc concatenation
PairPath capping_path_general(const JordanCurve& curve, const Inscription& insc);

// symplectic action: Hamiltonian term minus the capping area term, both by
// path integrals of eta = (1-r) x1 dy1 + r x2 dy2 (trajectory integrated
// numerically)
ActionValue action(const JordanCurve& curve, const Inscription& insc);

// closed-form route: cones 1/2 theta r^2 L^2 and 1/2 theta (1-r)^2 L^2 plus
// arc areas with the trajectory integrated by the circular-sector formula
ActionValue elegant_action(const JordanCurve& curve, const Inscription& insc);
ActionValue almost_elegant_action(const JordanCurve& curve, const Inscription& insc);

// action recomputed with a capping deliberately shifted by extra_winding full
// wraps (the value moves by exactly extra_winding * Area)
ActionValue action_with_winding_shift(const JordanCurve& curve, const Inscription& insc,
                                      int extra_winding);

// integral of x dy along the plane projection of the trajectory component
// (point rotating about the crossing center), numeric and analytic routes
double trajectory_integral_numeric(Point center, Point start, double theta);
double trajectory_integral_analytic(Point center, Point start, double theta);

}  // namespace trapeze
