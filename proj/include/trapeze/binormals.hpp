#pragma once

#include <vector>

#include "trapeze/curve.hpp"

namespace trapeze {

// chord meeting the curve orthogonally at both endpoints
struct Binormal {
  double s1 = 0.0, s2 = 0.0;
  Point p1, p2;
  double length = 0.0;
  bool family = false;  // member of a continuum (rank-deficient critical manifold)
};

struct BinormalSet {
  std::vector<Binormal> binormals;  // sorted by length descending
  bool degenerate_family = false;   // critical points form a continuum
};

// all critical points of (s1,s2) -> |gamma(s1)-gamma(s2)|^2 off the diagonal;
// smooth curves only
BinormalSet binormals(const JordanCurve& curve);

}  // namespace trapeze
