#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "trapeze/errors.hpp"
#include "trapeze/geometry.hpp"
#include "trapeze/trapezoid_map.hpp"

using namespace trapeze;

namespace {

std::mt19937 rng(12345);

PointPair random_pair(double span = 2.0) {
  std::uniform_real_distribution<double> u(-span, span);
  return {Point(u(rng), u(rng)), Point(u(rng), u(rng))};
}

TrapezoidClass random_class() {
  std::uniform_real_distribution<double> ur(0.02, 0.5);
  std::uniform_real_distribution<double> ut(0.05, kPi - 0.05);
  return TrapezoidClass(ur(rng), ut(rng));
}

}  // namespace

TEST_CASE("domain gates") {
  CHECK_THROWS_AS(TrapezoidClass(0.7, 1.0), Error);
  CHECK_THROWS_AS(TrapezoidClass(0.0, 1.0), Error);
  CHECK_THROWS_AS(TrapezoidClass(0.25, 0.0), Error);
  CHECK_THROWS_AS(TrapezoidClass(0.25, kPi), Error);
  CHECK_NOTHROW(TrapezoidClass(0.5, 3.1));
}

TEST_CASE("f_forward examples") {
  // diagonal collapses the second coordinate
  PointPair d = f_forward(0.3, {Point(1.2, -0.7), Point(1.2, -0.7)});
  CHECK(std::abs(d.w) < 1e-15);
  CHECK(std::abs(d.z - Point(1.2, -0.7)) < 1e-15);

  PointPair a = f_forward(0.5, {Point(1, 0), Point(-1, 0)});
  CHECK(std::abs(a.z) < 1e-15);
  CHECK(std::abs(a.w - Point(1, 0)) < 1e-15);

  PointPair b = f_forward(0.25, {Point(1, 0), Point(0, 0)});
  CHECK(std::abs(b.z - Point(0.75, 0)) < 1e-15);
  CHECK(std::abs(b.w - Point(std::sqrt(3.0) / 4.0, 0)) < 1e-15);
}

TEST_CASE("f_inverse inverts f_forward") {
  for (int i = 0; i < 200; ++i) {
    double r = std::uniform_real_distribution<double>(0.01, 0.5)(rng);
    PointPair p = random_pair();
    PointPair q = f_inverse(r, f_forward(r, p));
    CHECK(std::abs(q.z - p.z) < 1e-14);
    CHECK(std::abs(q.w - p.w) < 1e-14);
  }
}

TEST_CASE("g_map examples") {
  // diagonal is fixed
  TrapezoidClass cls(0.37, 1.3);
  PointPair d = g_map(cls, {Point(0.4, 0.9), Point(0.4, 0.9)});
  CHECK(std::abs(d.z - Point(0.4, 0.9)) < 1e-15);
  CHECK(std::abs(d.w - Point(0.4, 0.9)) < 1e-15);

  PointPair a = g_map(TrapezoidClass(0.5, kPi / 2), {Point(1, 0), Point(-1, 0)});
  CHECK(std::abs(a.z - Point(0, -1)) < 1e-14);
  CHECK(std::abs(a.w - Point(0, 1)) < 1e-14);

  PointPair b = g_map(TrapezoidClass::unchecked(0.25, kPi), {Point(1, 0), Point(0, 0)});
  CHECK(std::abs(b.z - Point(0.5, 0)) < 1e-13);
  CHECK(std::abs(b.w - Point(1.5, 0)) < 1e-13);
}

TEST_CASE("g_map agrees with the matrix route and preserves structure") {
  for (int i = 0; i < 500; ++i) {
    TrapezoidClass cls = random_class();
    PointPair p = random_pair();
    PointPair direct = g_map(cls, p);
    PointPair viamat = g_map_via_matrices(cls, p);
    CHECK(std::abs(direct.z - viamat.z) < 1e-12);
    CHECK(std::abs(direct.w - viamat.w) < 1e-12);
    // chord length is preserved
    CHECK(std::abs(direct.z - direct.w) ==
          doctest::Approx(std::abs(p.z - p.w)).epsilon(1e-12));
    // crossing point is preserved
    Point c0 = (1 - cls.r) * p.z + cls.r * p.w;
    Point c1 = (1 - cls.r) * direct.z + cls.r * direct.w;
    CHECK(std::abs(c1 - c0) < 1e-12);
  }
}

TEST_CASE("hamiltonian examples") {
  CHECK(hamiltonian(TrapezoidClass(0.3, 1.0), {Point(2, 1), Point(2, 1)}) == 0.0);
  double h = hamiltonian(TrapezoidClass::unchecked(0.5, kPi), {Point(1, 0), Point(-1, 0)});
  CHECK(h == doctest::Approx(kPi / 2).epsilon(1e-15));
  double h2 = hamiltonian(TrapezoidClass(0.25, 1.0), {Point(1, 0), Point(0, 0)});
  CHECK(h2 == doctest::Approx(3.0 / 32.0).epsilon(1e-15));
}

TEST_CASE("flow endpoints and group law") {
  for (int i = 0; i < 1000; ++i) {
    TrapezoidClass cls = random_class();
    PointPair p = random_pair();
    PointPair t0 = flow(cls, 0.0, p);
    CHECK(t0.z == p.z);
    CHECK(t0.w == p.w);
    PointPair t1 = flow(cls, 1.0, p);
    PointPair g = g_map(cls, p);
    CHECK(std::abs(t1.z - g.z) < 1e-13);
    CHECK(std::abs(t1.w - g.w) < 1e-13);
  }
  TrapezoidClass cls(0.31, 2.2);
  PointPair p = random_pair();
  std::uniform_real_distribution<double> u(0.0, 0.5);
  for (int i = 0; i < 200; ++i) {
    double t1 = u(rng), t2 = u(rng);
    PointPair a = flow(cls, t1, flow(cls, t2, p));
    PointPair b = flow(cls, t1 + t2, p);
    CHECK(std::abs(a.z - b.z) < 1e-12);
    CHECK(std::abs(a.w - b.w) < 1e-12);
  }
}

TEST_CASE("hamiltonian is constant along the flow") {
  for (int i = 0; i < 300; ++i) {
    TrapezoidClass cls = random_class();
    PointPair p = random_pair();
    double h0 = hamiltonian(cls, p);
    for (double t : {0.25, 0.5, 0.9})
      CHECK(hamiltonian(cls, flow(cls, t, p)) == doctest::Approx(h0).epsilon(1e-12));
  }
}

TEST_CASE("flow quarter period example") {
  PointPair q = flow(TrapezoidClass::unchecked(0.5, kPi), 0.5, {Point(1, 0), Point(-1, 0)});
  CHECK(std::abs(q.z - Point(0, -1)) < 1e-13);
  CHECK(std::abs(q.w - Point(0, 1)) < 1e-13);
}

TEST_CASE("symplectic form is preserved") {
  for (int i = 0; i < 1000; ++i) {
    TrapezoidClass cls = random_class();
    CHECK(symplectic_defect(cls) < 1e-10);
  }
}

TEST_CASE("diagonal geometry of the image") {
  // segments zw and z'w' intersect at p, split in ratio r:(1-r), meet at
  // angle theta, equal length
  for (int i = 0; i < 500; ++i) {
    TrapezoidClass cls = random_class();
    PointPair p = random_pair();
    if (std::abs(p.z - p.w) < 1e-3) continue;
    PointPair q = g_map(cls, p);
    Point cpt = (1 - cls.r) * p.z + cls.r * p.w;
    // split ratios
    CHECK(std::abs(p.z - cpt) ==
          doctest::Approx(cls.r * std::abs(p.z - p.w)).epsilon(1e-10));
    CHECK(std::abs(q.z - cpt) ==
          doctest::Approx(cls.r * std::abs(q.z - q.w)).epsilon(1e-10));
    // crossing angle
    double ang = std::arg((q.z - q.w) / (p.z - p.w));
    CHECK(std::abs(ang + cls.theta) < 1e-10);  // clockwise rotation
  }
}

TEST_CASE("rotations about the same point compose") {
  std::uniform_real_distribution<double> u(0.05, 1.5);
  for (int i = 0; i < 200; ++i) {
    double r = std::uniform_real_distribution<double>(0.05, 0.5)(rng);
    double t1 = u(rng), t2 = u(rng);
    PointPair p = random_pair();
    PointPair a = g_map(TrapezoidClass(r, t2), g_map(TrapezoidClass(r, t1), p));
    PointPair b = g_map(TrapezoidClass::unchecked(r, t1 + t2), p);
    CHECK(std::abs(a.z - b.z) < 1e-12);
    CHECK(std::abs(a.w - b.w) < 1e-12);
  }
}
