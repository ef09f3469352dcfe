#pragma once

#include <string>
#include <vector>

#include "trapeze/action.hpp"
#include "trapeze/curve.hpp"
#include "trapeze/inscriber.hpp"

namespace trapeze {

// minimal SVG writer for curves, inscriptions, and action area shading
class SvgCanvas {
 public:
  SvgCanvas(double min_x, double min_y, double max_x, double max_y, int pixels = 720);

  void add_curve(const JordanCurve& curve, const std::string& stroke = "#222222",
                 double width = 1.5);
  // both diagonals colored by the weight convention: the z-w diagonal (weight
  // 1-r) and the z'-w' diagonal (weight r), plus the trapezoid sides
  void add_inscription(const Inscription& insc);
  // cones and arc regions shaded by weight
  void add_action_shading(const JordanCurve& curve, const Inscription& insc);
  void add_segment(Point a, Point b, const std::string& stroke, double width = 1.5);
  void add_dot(Point p, const std::string& fill, double r = 3.0);

  std::string str() const;
  void save(const std::string& path) const;

 private:
  std::string transform(Point p) const;
  double scale_;
  double min_x_, min_y_, max_y_;
  int w_, h_;
  std::vector<std::string> elements_;
};

// bounding box helper with margin
SvgCanvas canvas_for(const JordanCurve& curve, double margin = 0.08);

}  // namespace trapeze
