#pragma once

#include <array>
#include <optional>
#include <vector>

#include "trapeze/curve.hpp"
#include "trapeze/trapezoid_map.hpp"

namespace trapeze {

enum class InscriptionKind { Elegant, AlmostElegant, Other };

const char* kind_name(InscriptionKind k);

struct Inscription {
  double s1 = 0.0, s2 = 0.0;    // diagonal endpoints z = gamma(s1), w = gamma(s2)
  double s1p = 0.0, s2p = 0.0;  // parameters of z', w'
  std::array<Point, 4> vertices;  // z, z', w, w'
  double diag_length = 0.0;
  double residual = 0.0;  // max signed-distance magnitude of z', w' to the curve
  TrapezoidClass cls = TrapezoidClass::unchecked(0.5, 1.0);
  InscriptionKind kind = InscriptionKind::Other;
  bool family = false;               // member of a 1-parameter family
  bool rectangle_ambiguity = false;  // r = 1/2: no longer parallel edge

  Point z() const { return vertices[0]; }
  Point zp() const { return vertices[1]; }
  Point w() const { return vertices[2]; }
  Point wp() const { return vertices[3]; }
};

struct FindOptions {
  int grid_n = 128;
  double tol_rel = 1e-10;  // convergence at residual < tol_rel * diameter
  bool classify = true;
  int max_seeds = 8192;
};

struct FindResult {
  std::vector<Inscription> inscriptions;  // sorted by (s1, s2)
  bool family = false;                    // solutions form a 1-parameter family
  bool none_found = false;
  int newton_divergences = 0;
};

// signed distances of z', w' to the curve for the candidate diagonal
// (gamma(s1), gamma(s2))
struct ResidualValue {
  double d1 = 0.0, d2 = 0.0;
  double s1p = 0.0, s2p = 0.0;  // projection feet parameters
};
ResidualValue residual(const JordanCurve& curve, const TrapezoidClass& cls, double s1, double s2);

// all inscriptions of the class found by a grid scan plus damped Newton;
// on polygons, by per-edge-pair closed-form solves
FindResult find_inscriptions(const JordanCurve& curve, const TrapezoidClass& cls,
                             const FindOptions& opts = {});

InscriptionKind classify(const JordanCurve& curve, Inscription& insc);

struct WidthOptions {
  int grid_n = 64;
  bool compute_theta_width = true;
  int phi_grid = 12;
  int refine_iters = 16;
};

struct WidthReport {
  double width = 0.0;        // infimal diagonal length at (r, theta)
  double theta_width = 0.0;  // infimum over angles phi in (0, theta]
  double minimizing_phi = 0.0;
};

WidthReport width(const JordanCurve& curve, const TrapezoidClass& cls,
                  const WidthOptions& opts = {});

// Newton-polish a seed at the given class; nullopt if it does not converge
std::optional<Inscription> polish_inscription(const JordanCurve& curve,
                                              const TrapezoidClass& cls, double s1, double s2,
                                              double tol_rel = 1e-10, bool do_classify = true);

// near-diagonal exclusion: inscriptions with diagonals at or below this are
// treated as degenerate
double diagonal_exclusion(const JordanCurve& curve);

}  // namespace trapeze
