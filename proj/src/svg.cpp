#include "trapeze/svg.hpp"

#include <cstdio>
#include <fstream>

#include "trapeze/errors.hpp"

namespace trapeze {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

constexpr const char* kDiagZW = "#c03030";   // weight 1-r
constexpr const char* kDiagZpWp = "#3050c0"; // weight r
constexpr const char* kConeZW = "#e8a0a0";
constexpr const char* kConeZpWp = "#a0b4e8";

}  // namespace

SvgCanvas::SvgCanvas(double min_x, double min_y, double max_x, double max_y, int pixels) {
  double span = std::max(max_x - min_x, max_y - min_y);
  scale_ = pixels / span;
  min_x_ = min_x;
  min_y_ = min_y;
  max_y_ = max_y;
  w_ = (int)((max_x - min_x) * scale_) + 1;
  h_ = (int)((max_y - min_y) * scale_) + 1;
}

std::string SvgCanvas::transform(Point p) const {
  return fmt((p.real() - min_x_) * scale_) + "," + fmt((max_y_ - p.imag()) * scale_);
}

void SvgCanvas::add_curve(const JordanCurve& curve, const std::string& stroke, double width) {
  std::string d = "M ";
  const int n = 512;
  for (int i = 0; i <= n; ++i) {
    d += transform(curve.eval((double)i / n));
    if (i == 0) d += " L ";
    else if (i < n) d += ' ';
  }
  d += " Z";
  elements_.push_back("<path d=\"" + d + "\" fill=\"none\" stroke=\"" + stroke +
                      "\" stroke-width=\"" + fmt(width) + "\"/>");
}

void SvgCanvas::add_segment(Point a, Point b, const std::string& stroke, double width) {
  elements_.push_back("<path d=\"M " + transform(a) + " L " + transform(b) +
                      "\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt(width) +
                      "\" fill=\"none\"/>");
}

void SvgCanvas::add_dot(Point p, const std::string& fill, double r) {
  auto xy = transform(p);
  auto comma = xy.find(',');
  elements_.push_back("<circle cx=\"" + xy.substr(0, comma) + "\" cy=\"" +
                      xy.substr(comma + 1) + "\" r=\"" + fmt(r) + "\" fill=\"" + fill + "\"/>");
}

void SvgCanvas::add_inscription(const Inscription& insc) {
  // sides
  add_segment(insc.z(), insc.zp(), "#777777", 1.0);
  add_segment(insc.zp(), insc.w(), "#777777", 1.0);
  add_segment(insc.w(), insc.wp(), "#777777", 1.0);
  add_segment(insc.wp(), insc.z(), "#777777", 1.0);
  // diagonals by weight convention
  add_segment(insc.z(), insc.w(), kDiagZW, 2.0);
  add_segment(insc.zp(), insc.wp(), kDiagZpWp, 2.0);
  add_dot(insc.z(), kDiagZW);
  add_dot(insc.w(), kDiagZW);
  add_dot(insc.zp(), kDiagZpWp);
  add_dot(insc.wp(), kDiagZpWp);
}

void SvgCanvas::add_action_shading(const JordanCurve& curve, const Inscription& insc) {
  const double r = insc.cls.r;
  const double theta = insc.cls.theta;
  Point center = (1.0 - r) * insc.z() + r * insc.w();
  // cones: circular sectors swept by the two diagonal endpoints
  auto sector = [&](Point start, const char* color) {
    std::string d = "M " + transform(center) + " L ";
    const int n = 48;
    for (int i = 0; i <= n; ++i) {
      Point rot = std::polar(1.0, -theta * i / n);
      d += transform(center + rot * (start - center));
      d += ' ';
    }
    d += "Z";
    elements_.push_back("<path d=\"" + d + "\" fill=\"" + color +
                        "\" fill-opacity=\"0.55\" stroke=\"none\"/>");
  };
  sector(insc.z(), kConeZW);
  sector(insc.w(), kConeZpWp);
  // arc regions: curve arc z->z' closed by the trajectory arc backward
  try {
    PairPath path = capping_path(curve, insc);
    auto region = [&](const std::vector<ParamArc>& route, Point start, const char* color) {
      std::string d = "M ";
      const int n = 96;
      for (const auto& arc : route)
        for (int i = 0; i <= n; ++i) {
          d += transform(curve.eval(arc.start + arc.delta * i / n));
          d += i == 0 && d.size() < 24 ? std::string(" L ") : std::string(" ");
        }
      for (int i = n; i >= 0; --i) {
        Point rot = std::polar(1.0, -theta * i / n);
        d += transform(center + rot * (start - center));
        d += ' ';
      }
      d += "Z";
      elements_.push_back("<path d=\"" + d + "\" fill=\"" + color +
                          "\" fill-opacity=\"0.3\" stroke=\"none\"/>");
    };
    region(path.route1, insc.z(), kConeZW);
    region(path.route2, insc.w(), kConeZpWp);
  } catch (const Error&) {
    // shading is best-effort; kinds without a recipe just skip it
  }
}

std::string SvgCanvas::str() const {
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w_) +
                    "\" height=\"" + std::to_string(h_) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& e : elements_) {
    out += e;
    out += '\n';
  }
  out += "</svg>\n";
  return out;
}

void SvgCanvas::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << str();
}

SvgCanvas canvas_for(const JordanCurve& curve, double margin) {
  double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;
  const int n = 512;
  for (int i = 0; i < n; ++i) {
    Point p = curve.eval((double)i / n);
    min_x = std::min(min_x, p.real());
    max_x = std::max(max_x, p.real());
    min_y = std::min(min_y, p.imag());
    max_y = std::max(max_y, p.imag());
  }
  double mx = margin * (max_x - min_x), my = margin * (max_y - min_y);
  return SvgCanvas(min_x - mx, min_y - my, max_x + mx, max_y + my);
}

}  // namespace trapeze
