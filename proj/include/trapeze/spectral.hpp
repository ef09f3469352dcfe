#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trapeze/action.hpp"
#include "trapeze/binormals.hpp"
#include "trapeze/inscriber.hpp"

namespace trapeze {

struct SpectrumEntry {
  Inscription inscription;
  ActionValue action;
};

struct ActionSpectrum {
  TrapezoidClass cls = TrapezoidClass::unchecked(0.5, 1.0);
  std::vector<SpectrumEntry> entries;  // sorted by action value ascending
  bool family = false;
  bool none_found = false;
};

ActionSpectrum spectrum(const JordanCurve& curve, const TrapezoidClass& cls, int grid_n = 128);

enum class BranchEnd { RangeEnd, Shrinkout, Quadrisecant, Fold, StepCollapse };

const char* branch_end_name(BranchEnd e);

struct BranchSample {
  double theta = 0.0;
  Inscription inscription;
  double action = 0.0;
  bool heuristic_jump = false;
};

struct Branch {
  double r = 0.0;
  std::vector<BranchSample> samples;
  BranchEnd end = BranchEnd::RangeEnd;
  Point limit_point;                       // shrinkout
  double limit_action = 0.0;               // shrinkout / quadrisecant (extrapolated)
  std::array<Point, 4> quadrisecant_points{};
  double theta_fold = 0.0;
  // per-step |d action| <= 2 r (1-r) Rad^2 |d theta| + tol violations
  int variation_violations = 0;
};

struct StepControl {
  double initial = 0.01;
  double min_step = 1e-9;
  double max_step = 0.05;
  double record_every = 0.0;  // 0: record every accepted step
};

Branch continue_branch(const JordanCurve& curve, double r, double theta_start, double theta_end,
                       const Inscription& seed, const StepControl& ctrl = {});

struct SpectralProxy {
  double r = 0.0;
  std::vector<double> theta_grid;
  std::vector<double> l2_values;
  std::vector<bool> heuristic;  // samples recovered via nearest spectrum value
  std::string provenance;
  bool monotone = true;
  int slope_violations = 0;
};

SpectralProxy l2_proxy(const JordanCurve& curve, double r, const std::vector<double>& theta_grid);

struct TriangleReport {
  int pairs_checked = 0;
  int violations = 0;
  std::vector<std::array<double, 3>> violating;  // theta1, theta2, excess
};

TriangleReport check_triangle(const SpectralProxy& proxy, double area);

// arctan( cot(theta/2) / (1-2r) ): the turn angle a curve must absorb at a
// small inscription; pi/2 at r = 1/2 by continuity
double max_turn_angle(double r, double theta);

// threshold pi - 2 arctan((1-2r)/K): above it every small inscription on a
// K-Lipschitz graph is elegant or almost-elegant
double elegance_threshold(double r, double K);

// admissible shrinkout limit actions {0, r Area, (1-r) Area} mod Area
std::vector<double> shrinkout_limits(const JordanCurve& curve, double r);

// classify a limit action against the admissible set (mod Area), 1% tolerance
struct ShrinkoutMatch {
  bool matched = false;
  double nearest = 0.0;
  double distance = 0.0;
};
ShrinkoutMatch match_shrinkout_limit(const JordanCurve& curve, double r, double limit_action);

struct DualityReport {
  bool pass = false;
  double action_sum = 0.0;
  double area = 0.0;
  double residual = 0.0;  // |sum - area|
};

DualityReport quadrisecant_duality(const JordanCurve& curve, const Branch& plus,
                                   const Branch& minus);

struct VertexReport {
  bool pass = false;
  double limit_param = 0.0;
  double curvature_derivative = 0.0;
  double nearest_root = 0.0;
  double root_distance = 0.0;  // parameter distance to the nearest root of kappa'
  bool vacuous = false;        // curvature derivative vanishes identically
};

VertexReport vertex_check(const JordanCurve& curve, const Branch& shrink_branch);

// roots of the curvature derivative (smooth curves)
std::vector<double> curvature_derivative_roots(const JordanCurve& curve, int scan_n = 2048);

}  // namespace trapeze
