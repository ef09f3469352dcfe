#pragma once

#include <string>

#include "trapeze/curve.hpp"

namespace trapeze {

struct LoadedCurve {
  JordanCurve curve;
  bool orientation_reversed = false;
  std::string kind;
};

// {"kind":"fourier","coefficients":[[re,im],...]} indexed k=-K..K
// {"kind":"polygon","vertices":[[x,y],...]}
// {"kind":"samples","points":[[x,y],...]}
LoadedCurve load_curve_json(const std::string& text);
LoadedCurve load_curve_file(const std::string& path);

std::string curve_to_json(const JordanCurve& curve);
void save_curve_file(const JordanCurve& curve, const std::string& path);

}  // namespace trapeze
