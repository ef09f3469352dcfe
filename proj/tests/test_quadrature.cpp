#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "trapeze/quadrature.hpp"

using namespace trapeze;

TEST_CASE("gauss-legendre nodes integrate polynomials exactly") {
  const auto& rule = gauss_legendre(8);
  double acc = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * std::pow(rule.nodes[i], 14);
  CHECK(acc == doctest::Approx(2.0 / 15.0).epsilon(1e-13));
}

TEST_CASE("adaptive integration hits analytic values") {
  double v = integrate_adaptive([](double x) { return std::sin(x); }, 0.0, 3.14159265358979324);
  CHECK(v == doctest::Approx(2.0).epsilon(1e-12));
  double w = integrate_adaptive([](double x) { return std::exp(-x * x); }, -6.0, 6.0);
  CHECK(w == doctest::Approx(std::sqrt(3.14159265358979324)).epsilon(1e-12));
}

TEST_CASE("breakpoint splitting handles kinks") {
  auto f = [](double x) { return std::abs(x - 0.3); };
  double v = integrate_with_breaks(f, 0.0, 1.0, {0.3});
  CHECK(v == doctest::Approx(0.5 * 0.09 + 0.5 * 0.49).epsilon(1e-13));
}
