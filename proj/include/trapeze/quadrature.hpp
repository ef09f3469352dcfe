#pragma once

#include <functional>
#include <vector>

namespace trapeze {

// nodes and weights on [-1,1]
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussLegendreRule& gauss_legendre(int n);

// fixed-panel composite Gauss-Legendre
double integrate_panels(const std::function<double(double)>& f, double a, double b, int panels,
                        int nodes_per_panel);

// composite Gauss-Legendre, 64 nodes per unit length of [a,b] to start, panel
// count doubled until two refinements agree to rel_tol (relative to scale)
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-10, int initial_panels = 0,
                          int max_doublings = 12);

// same, but the integrand is split exactly at the given breakpoints (for
// piecewise-smooth integrands such as polygon parametrizations)
double integrate_with_breaks(const std::function<double(double)>& f, double a, double b,
                             const std::vector<double>& breaks, double rel_tol = 1e-10);

}  // namespace trapeze
