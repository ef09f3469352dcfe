#include "trapeze/curve_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "trapeze/errors.hpp"
#include "trapeze/json_out.hpp"

namespace trapeze {

namespace {

std::vector<Point> parse_points(const nlohmann::json& arr) {
  std::vector<Point> out;
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2)
      throw Error(ErrorCode::IoError, "expected [x, y] pairs");
    out.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return out;
}

}  // namespace

LoadedCurve load_curve_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::IoError, std::string("curve JSON parse: ") + e.what());
  }
  std::string kind = j.value("kind", "");
  LoadedCurve out{[&]() -> JordanCurve {
                    if (kind == "fourier")
                      return JordanCurve::fourier(parse_points(j.at("coefficients")));
                    if (kind == "polygon")
                      return JordanCurve::polygon(parse_points(j.at("vertices")));
                    if (kind == "samples")
                      return JordanCurve::from_samples(parse_points(j.at("points")));
                    throw Error(ErrorCode::IoError, "unknown curve kind: " + kind);
                  }(),
                  false, kind};
  out.orientation_reversed = out.curve.orientation_was_reversed();
  return out;
}

LoadedCurve load_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_curve_json(ss.str());
}

std::string curve_to_json(const JordanCurve& curve) {
  Json j;
  if (curve.kind() == CurveKind::Fourier) {
    j["kind"] = "fourier";
    Json coeffs = Json::array();
    for (const auto& c : curve.fourier_coefficients())
      coeffs.push_back(Json::array({c.real(), c.imag()}));
    j["coefficients"] = std::move(coeffs);
  } else {
    j["kind"] = "polygon";
    Json verts = Json::array();
    for (const auto& v : curve.polygon_vertices())
      verts.push_back(Json::array({v.real(), v.imag()}));
    j["vertices"] = std::move(verts);
  }
  j["metadata"] = Json{{"area", curve.area()},
                       {"radius", curve.radius()},
                       {"length", curve.arc_length()},
                       {"enclosing_circle_radius", curve.enclosing_circle_radius()}};
  return dump_json(j);
}

void save_curve_file(const JordanCurve& curve, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << curve_to_json(curve);
}

}  // namespace trapeze
