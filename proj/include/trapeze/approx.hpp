#pragma once

#include <functional>
#include <vector>

#include "trapeze/curve.hpp"
#include "trapeze/inscriber.hpp"

namespace trapeze {

// smooth nonnegative profile on [-1,1] with unit integral
struct MollifierKernel {
  std::function<double(double)> profile;
  double normalization = 1.0;  // profile already includes it

  static MollifierKernel bump();  // c exp(-1/(1-u^2)) on (-1,1)
  double integral() const;        // recomputed, should be 1 to 1e-10
  // Fourier multiplier: integral of profile(v) e^{-2 pi i k eps v} dv (real
  // for the even bump)
  double mode_factor(int k, double eps) const;
};

struct MollifyReport {
  double max_deviation = 0.0;        // max |gamma_eps - gamma| over samples
  double continuity_modulus = 0.0;   // modulus of continuity of gamma over eps
};

// gamma_eps(s) = integral (1/eps) phi(u/eps) gamma(s-u) du, returned as a
// smooth Fourier curve
JordanCurve mollify(const JordanCurve& curve, double eps, const MollifierKernel& kernel,
                    MollifyReport* report = nullptr);

struct GraphicalConstants {
  double K = 0.0;     // the Lipschitz bound used
  double mu_K = 0.0;  // local K-Lipschitz-graphical constant
  double mu = 0.0;    // local monotonicity constant
  double grid_resolution = 0.0;
  double worst_param = 0.0;  // base parameter achieving mu_K
};

struct ConstantsOptions {
  int base_n = 192;         // dense base parameters (polygon vertices always included)
  int directions = 720;     // angular samples
  int window_grid = 4096;   // window growth resolution
  int refine_iters = 16;    // golden-section refinement of the direction
};

GraphicalConstants lipschitz_constants(const JordanCurve& curve, double K,
                                       const ConstantsOptions& opts = {});

struct PreservationRung {
  double eps = 0.0;
  double mu_K = 0.0;
  double mu = 0.0;
  double max_deviation = 0.0;
};

struct PreservationReport {
  GraphicalConstants base;
  std::vector<PreservationRung> rungs;
  bool liminf_ok = false;  // smallest-eps constants above base within tolerance
  double tolerance = 0.05;
};

PreservationReport mollify_preserves(const JordanCurve& curve, double K,
                                     const std::vector<double>& eps_seq);

struct TheoremAWitness {
  double theta = 0.0;
  bool found = false;
  std::vector<double> ladder_diagonals;  // best witness diagonal per eps rung
  double min_diagonal = 0.0;
  Inscription witness;  // at the smallest eps
};

struct TheoremAReport {
  double admissible_bound = 0.0;  // Area / (2 (1-r) Rad^2)
  std::vector<TheoremAWitness> witnesses;
  std::vector<double> eps_ladder;
  bool all_found = false;
};

TheoremAReport theorem_A_experiment(const JordanCurve& curve, double r,
                                    const std::vector<double>& theta_samples,
                                    const std::vector<double>& eps_ladder = {0.02, 0.01, 0.005},
                                    int grid_n = 96);

}  // namespace trapeze
