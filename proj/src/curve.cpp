#include "trapeze/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "trapeze/errors.hpp"
#include "trapeze/quadrature.hpp"

namespace trapeze {

namespace {

constexpr double kSimplicityRel = 1e-9;       // min self distance >= 1e-9 * diameter
constexpr double kSimplicityParamGap = 1e-3;  // for |s-t| >= 1e-3 (mod 1)

std::vector<Point> reversed_fourier(const std::vector<Point>& c) {
  // s -> -s maps c_k to c_{-k}
  std::vector<Point> out(c.rbegin(), c.rend());
  return out;
}

double signed_area_fourier(const std::vector<Point>& c) {
  // area = pi * sum_k k |c_k|^2
  int K = ((int)c.size() - 1) / 2;
  double acc = 0.0;
  for (int k = -K; k <= K; ++k) acc += k * norm2(c[k + K]);
  return kPi * acc;
}

double shoelace(const std::vector<Point>& v) {
  double acc = 0.0;
  size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    acc += cross(a, b);
  }
  return 0.5 * acc;
}

}  // namespace

JordanCurve JordanCurve::fourier(std::vector<Point> coefficients) {
  if (coefficients.empty() || coefficients.size() % 2 == 0)
    throw Error(ErrorCode::DomainError, "fourier coefficients must have odd count k=-K..K");
  JordanCurve c;
  c.kind_ = CurveKind::Fourier;
  c.coeff_ = std::move(coefficients);
  c.K_ = ((int)c.coeff_.size() - 1) / 2;
  if (signed_area_fourier(c.coeff_) < 0.0) {
    c.coeff_ = reversed_fourier(c.coeff_);
    c.reversed_on_load_ = true;
  }
  c.finalize(true);
  return c;
}

JordanCurve JordanCurve::polygon(std::vector<Point> vertices) {
  if (vertices.size() < 3) throw Error(ErrorCode::DomainError, "polygon needs >= 3 vertices");
  JordanCurve c;
  c.kind_ = CurveKind::Polygon;
  c.verts_ = std::move(vertices);
  if (shoelace(c.verts_) < 0.0) {
    std::reverse(c.verts_.begin(), c.verts_.end());
    c.reversed_on_load_ = true;
  }
  size_t n = c.verts_.size();
  c.vert_param_.assign(n + 1, 0.0);
  double acc = 0.0;
  for (size_t i = 0; i < n; ++i) {
    acc += std::abs(c.verts_[(i + 1) % n] - c.verts_[i]);
    c.vert_param_[i + 1] = acc;
  }
  c.perimeter_ = acc;
  if (acc <= 0.0) throw Error(ErrorCode::DomainError, "degenerate polygon");
  for (auto& p : c.vert_param_) p /= acc;
  c.finalize(true);
  return c;
}

JordanCurve JordanCurve::from_samples(const std::vector<Point>& points) {
  size_t m = points.size();
  if (m < 5) throw Error(ErrorCode::DomainError, "need >= 5 samples");
  int K = (int)((m - 1) / 2);
  std::vector<Point> coeff(2 * K + 1);
  for (int k = -K; k <= K; ++k) {
    Point acc = 0.0;
    for (size_t j = 0; j < m; ++j) {
      double ang = -kTwoPi * k * (double)j / (double)m;
      acc += points[j] * std::polar(1.0, ang);
    }
    coeff[k + K] = acc / (double)m;
  }
  return fourier(std::move(coeff));
}

Point JordanCurve::eval_raw(double s) const {
  if (kind_ == CurveKind::Fourier) {
    const Point rot = std::polar(1.0, kTwoPi * s);
    Point acc = 0.0;
    // Horner over k = K .. -K: acc*rot + c_k
    for (int k = K_; k >= -K_; --k) acc = acc * rot + coeff_[k + K_];
    return acc * std::polar(1.0, -kTwoPi * K_ * s);
  }
  double t;
  int e = polygon_edge_at(s, &t);
  size_t n = verts_.size();
  return verts_[e] + t * (verts_[(e + 1) % n] - verts_[e]);
}

int JordanCurve::polygon_edge_at(double s, double* t) const {
  s = wrap_param(s);
  // vert_param_ is sorted ascending with vert_param_[0]=0, back()=1
  int lo = (int)(std::upper_bound(vert_param_.begin(), vert_param_.end(), s) -
                 vert_param_.begin()) - 1;
  lo = std::clamp(lo, 0, (int)verts_.size() - 1);
  double span = vert_param_[lo + 1] - vert_param_[lo];
  *t = span > 0.0 ? (s - vert_param_[lo]) / span : 0.0;
  return lo;
}

Point JordanCurve::derivative_raw(double s) const {
  if (kind_ == CurveKind::Fourier) {
    const Point rot = std::polar(1.0, kTwoPi * s);
    Point acc = 0.0;
    for (int k = K_; k >= -K_; --k) acc = acc * rot + coeff_[k + K_] * Point(0.0, kTwoPi * k);
    return acc * std::polar(1.0, -kTwoPi * K_ * s);
  }
  double t;
  int e = polygon_edge_at(s, &t);
  size_t n = verts_.size();
  double span = vert_param_[e + 1] - vert_param_[e];
  return (verts_[(e + 1) % n] - verts_[e]) / span;
}

Point JordanCurve::eval(double s) const { return eval_raw(wrap_param(s)); }
Point JordanCurve::derivative(double s) const { return derivative_raw(wrap_param(s)); }

Point JordanCurve::second_derivative(double s) const {
  if (kind_ != CurveKind::Fourier)
    throw Error(ErrorCode::DomainError, "second derivative needs a smooth curve");
  s = wrap_param(s);
  const Point rot = std::polar(1.0, kTwoPi * s);
  Point acc = 0.0;
  for (int k = K_; k >= -K_; --k) {
    double f = kTwoPi * k;
    acc = acc * rot + coeff_[k + K_] * Point(-f * f, 0.0);
  }
  return acc * std::polar(1.0, -kTwoPi * K_ * s);
}

double JordanCurve::curvature(double s) const {
  Point d1 = derivative(s);
  Point d2 = second_derivative(s);
  double v = std::abs(d1);
  return cross(d1, d2) / (v * v * v);
}

double JordanCurve::curvature_derivative(double s) const {
  if (kind_ != CurveKind::Fourier)
    throw Error(ErrorCode::DomainError, "curvature derivative needs a smooth curve");
  s = wrap_param(s);
  Point d1 = derivative(s);
  Point d2 = second_derivative(s);
  // third derivative
  const Point rot = std::polar(1.0, kTwoPi * s);
  Point d3 = 0.0;
  for (int k = K_; k >= -K_; --k) {
    double f = kTwoPi * k;
    d3 = d3 * rot + coeff_[k + K_] * Point(0.0, -f * f * f);
  }
  d3 *= std::polar(1.0, -kTwoPi * K_ * s);
  double v2 = norm2(d1);
  double v = std::sqrt(v2);
  double num = cross(d1, d2);
  // kappa = num / v^3 ; kappa' = (cross(d1,d3) v^2 - 3 num dot(d1,d2)) / v^5
  return (cross(d1, d3) * v2 - 3.0 * num * dot(d1, d2)) / (v2 * v2 * v);
}

int JordanCurve::quadrature_panels(double a, double b) const {
  double span = std::abs(b - a);
  return std::max(1, (int)std::ceil(span * std::max(1, K_ / 8)));
}

double JordanCurve::area_by_quadrature() const {
  if (kind_ == CurveKind::Polygon) return shoelace(verts_);
  auto f = [this](double s) {
    Point g = eval_raw(wrap_param(s));
    Point d = derivative_raw(wrap_param(s));
    return 0.5 * (g.real() * d.imag() - g.imag() * d.real());
  };
  return integrate_adaptive(f, 0.0, 1.0, 1e-12, quadrature_panels(0.0, 1.0));
}

double JordanCurve::arc_length_by_quadrature() const {
  if (kind_ == CurveKind::Polygon) return perimeter_;
  auto f = [this](double s) { return std::abs(derivative_raw(wrap_param(s))); };
  return integrate_adaptive(f, 0.0, 1.0, 1e-12, quadrature_panels(0.0, 1.0));
}

double JordanCurve::integral_x_dy(double s0, double s1) const {
  if (s0 == s1) return 0.0;
  if (kind_ == CurveKind::Polygon) {
    // exact: sum of straight-segment contributions (Px+Qx)/2 * (Qy-Py)
    double sign = 1.0;
    if (s1 < s0) {
      std::swap(s0, s1);
      sign = -1.0;
    }
    double acc = 0.0;
    double s = s0;
    while (s < s1 - 1e-15) {
      double t;
      int e = polygon_edge_at(s, &t);
      double edge_end = std::floor(s) + vert_param_[e + 1];
      double stop = std::min(edge_end, s1);
      Point a = eval(s);
      Point b = eval(stop == edge_end ? edge_end - 1e-15 : stop);
      // evaluate exactly at the edge endpoint to avoid wrap issues
      if (stop == edge_end) b = verts_[(e + 1) % verts_.size()];
      acc += 0.5 * (a.real() + b.real()) * (b.imag() - a.imag());
      s = stop + (stop == edge_end ? 1e-15 : 0.0);
      if (stop >= s1 - 1e-15) break;
    }
    return sign * acc;
  }
  auto f = [this](double s) {
    Point g = eval_raw(wrap_param(s));
    Point d = derivative_raw(wrap_param(s));
    return g.real() * d.imag();
  };
  return integrate_adaptive(f, s0, s1, 1e-11, quadrature_panels(s0, s1));
}

double JordanCurve::green_area(double s0, double s1) const {
  if (kind_ == CurveKind::Polygon) {
    double acc = 0.0;
    // 1/2 (x y' - y x') accumulated exactly per segment: cross(a,b)/2
    double sign = 1.0;
    if (s1 < s0) {
      std::swap(s0, s1);
      sign = -1.0;
    }
    double s = s0;
    Point a = eval(s);
    while (s < s1 - 1e-15) {
      double t;
      int e = polygon_edge_at(s, &t);
      double edge_end = std::floor(s) + vert_param_[e + 1];
      double stop = std::min(edge_end, s1);
      Point b = (stop == edge_end) ? verts_[(e + 1) % verts_.size()] : eval(stop);
      acc += 0.5 * cross(a, b);
      a = b;
      s = stop + (stop == edge_end ? 1e-15 : 0.0);
      if (stop >= s1 - 1e-15) break;
    }
    return sign * acc;
  }
  auto f = [this](double s) {
    Point g = eval_raw(wrap_param(s));
    Point d = derivative_raw(wrap_param(s));
    return 0.5 * (g.real() * d.imag() - g.imag() * d.real());
  };
  return integrate_adaptive(f, s0, s1, 1e-11, quadrature_panels(s0, s1));
}

void JordanCurve::finalize(bool check_simple) {
  // sample table
  int n = 1024;
  if (kind_ == CurveKind::Fourier) n = std::max(1024, 8 * K_);
  if (kind_ == CurveKind::Polygon) n = std::max(1024, 16 * (int)verts_.size());
  n = std::min(n, 32768);
  table_pos_.resize(n);
  table_der_.resize(n);
  for (int i = 0; i < n; ++i) {
    double s = (double)i / n;
    table_pos_[i] = eval_raw(s);
    table_der_[i] = derivative_raw(s);
  }

  area_ = area_by_quadrature();
  if (area_ <= 0.0) throw Error(ErrorCode::NonSimpleCurve, "non-positive enclosed area");
  arc_length_ = arc_length_by_quadrature();

  // radius: half the diameter (max pairwise distance)
  if (kind_ == CurveKind::Polygon) {
    double best = 0.0;
    for (size_t i = 0; i < verts_.size(); ++i)
      for (size_t j = i + 1; j < verts_.size(); ++j)
        best = std::max(best, std::abs(verts_[i] - verts_[j]));
    radius_ = 0.5 * best;
  } else {
    int stride = std::max(1, n / 512);
    double best = 0.0;
    int bi = 0, bj = 0;
    for (int i = 0; i < n; i += stride)
      for (int j = i + stride; j < n; j += stride) {
        double d = norm2(table_pos_[i] - table_pos_[j]);
        if (d > best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    // local ascent on |gamma(s)-gamma(t)|^2 (alternating maximization)
    double s = (double)bi / n, t = (double)bj / n;
    double win = (double)stride / n;
    for (int it = 0; it < 40; ++it) {
      double step = win / 8.0;
      bool moved = false;
      for (double* var : {&s, &t}) {
        double base = *var;
        double f0 = norm2(eval(s) - eval(t));
        for (double cand : {base - step, base + step}) {
          double save = *var;
          *var = cand;
          double f = norm2(eval(s) - eval(t));
          if (f > f0) {
            f0 = f;
            moved = true;
          } else {
            *var = save;
          }
        }
      }
      if (!moved) win /= 2.0;
      if (win < 1e-13) break;
    }
    radius_ = 0.5 * std::abs(eval(s) - eval(t));
  }

  enclosing_radius_ = smallest_enclosing_circle(table_pos_).radius;

  if (check_simple && min_self_distance() < kSimplicityRel * diameter())
    throw Error(ErrorCode::NonSimpleCurve, "self distance below simplicity tolerance");
}

double JordanCurve::min_self_distance() const {
  const int n = 512;
  const int tn = (int)table_pos_.size();
  const int stride = std::max(1, tn / n);
  double best = std::numeric_limits<double>::infinity();
  int bi = 0, bj = 0;
  for (int i = 0; i < tn; i += stride) {
    for (int j = i + stride; j < tn; j += stride) {
      double ds = param_dist((double)i / tn, (double)j / tn);
      if (ds < kSimplicityParamGap) continue;
      double d = norm2(table_pos_[i] - table_pos_[j]);
      if (d < best) {
        best = d;
        bi = i;
        bj = j;
      }
    }
  }
  // local refinement around the grid minimizer
  double s = (double)bi / tn, t = (double)bj / tn;
  double win = (double)stride / tn;
  for (int it = 0; it < 60; ++it) {
    double step = win / 4.0;
    bool moved = false;
    for (double* var : {&s, &t}) {
      double f0 = norm2(eval(s) - eval(t));
      double base = *var;
      for (double cand : {base - step, base + step}) {
        double save = *var;
        *var = cand;
        if (param_dist(s, t) < kSimplicityParamGap) {
          *var = save;
          continue;
        }
        double f = norm2(eval(s) - eval(t));
        if (f < f0) {
          f0 = f;
          moved = true;
        } else {
          *var = save;
        }
      }
    }
    if (!moved) win /= 2.0;
    if (win < 1e-14) break;
  }
  return std::min(std::sqrt(best), std::abs(eval(s) - eval(t)));
}

double JordanCurve::modulus_of_continuity(double eps) const {
  const int tn = (int)table_pos_.size();
  int reach = std::max(1, (int)std::ceil(eps * tn));
  double best = 0.0;
  for (int i = 0; i < tn; ++i)
    for (int j = 1; j <= reach; ++j)
      best = std::max(best, norm2(table_pos_[i] - table_pos_[(i + j) % tn]));
  return std::sqrt(best);
}

Projection JordanCurve::project(Point p) const {
  const double diam = diameter();
  const double tie_tol = 1e-9 * diam;

  if (kind_ == CurveKind::Polygon) {
    // exact per-edge projection; track all near-minimal feet for the
    // ambiguity flag and the smaller-s tie rule
    size_t nv = verts_.size();
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, double>> feet;  // (distance, s)
    for (size_t i = 0; i < nv; ++i) {
      Point a = verts_[i], b = verts_[(i + 1) % nv];
      Point e = b - a;
      double t = std::clamp(dot(p - a, e) / norm2(e), 0.0, 1.0);
      Point foot = a + t * e;
      double d = std::abs(p - foot);
      double s = vert_param_[i] + t * (vert_param_[i + 1] - vert_param_[i]);
      feet.emplace_back(d, wrap_param(s));
      best = std::min(best, d);
    }
    double best_s = 2.0;
    bool ambiguous = false;
    double first_s = -1.0;
    for (auto& [d, s] : feet) {
      if (d > best + tie_tol) continue;
      best_s = std::min(best_s, s);
      if (first_s < 0.0)
        first_s = s;
      else if (param_dist(s, first_s) > 1e-6)
        ambiguous = true;
    }
    bool inside = false;
    for (size_t i = 0, j = nv - 1; i < nv; j = i++) {
      const Point& vi = verts_[i];
      const Point& vj = verts_[j];
      if (((vi.imag() > p.imag()) != (vj.imag() > p.imag())) &&
          (p.real() < (vj.real() - vi.real()) * (p.imag() - vi.imag()) /
                              (vj.imag() - vi.imag()) +
                          vi.real()))
        inside = !inside;
    }
    Projection out;
    out.s = best_s;
    out.signed_distance = inside ? -best : best;
    out.ambiguous = ambiguous;
    return out;
  }

  // smooth: scan the table, polish local minima by Newton on (g(s)-p).g'(s)=0
  const int tn = (int)table_pos_.size();
  std::vector<int> candidates;
  std::vector<double> d2(tn);
  double best2 = std::numeric_limits<double>::infinity();
  for (int i = 0; i < tn; ++i) {
    d2[i] = norm2(table_pos_[i] - p);
    best2 = std::min(best2, d2[i]);
  }
  double margin = std::sqrt(best2) + 1e-3 * diam;
  double margin2 = margin * margin;
  for (int i = 0; i < tn; ++i) {
    if (d2[i] > margin2) continue;
    if (d2[i] <= d2[(i + 1) % tn] && d2[i] < d2[(i + tn - 1) % tn]) candidates.push_back(i);
  }
  if (candidates.empty()) {
    // flat plateau (e.g. the center of a circle)
    int arg = 0;
    for (int i = 1; i < tn; ++i)
      if (d2[i] < d2[arg]) arg = i;
    candidates.push_back(arg);
  }
  std::vector<std::pair<double, double>> minima;  // (distance, s)
  double best_d = std::numeric_limits<double>::infinity();
  for (int idx : candidates) {
    double s = (double)idx / tn;
    for (int it = 0; it < 30; ++it) {
      Point g = eval(s), d1 = derivative(s);
      double f = dot(g - p, d1);
      double fp = norm2(d1) + dot(g - p, second_derivative(s));
      if (fp == 0.0) break;
      double step = f / fp;
      step = std::clamp(step, -2.0 / tn, 2.0 / tn);
      s = wrap_param(s - step);
      if (std::abs(step) < 1e-16) break;
    }
    double d = std::abs(eval(s) - p);
    minima.emplace_back(d, wrap_param(s));
    best_d = std::min(best_d, d);
  }
  double best_s = 2.0;
  bool ambiguous = false;
  double first_s = -1.0;
  for (auto& [d, s] : minima) {
    if (d > best_d + tie_tol) continue;
    best_s = std::min(best_s, s);
    if (first_s < 0.0)
      first_s = s;
    else if (param_dist(s, first_s) > 1e-6)
      ambiguous = true;
  }
  // continuum ties (table entries equidistant far from the chosen foot):
  // refine the best far candidate only when it is plausibly tied
  if (!ambiguous) {
    int far = -1;
    for (int i = 0; i < tn; ++i) {
      if (param_dist((double)i / tn, best_s) <= 0.05) continue;
      if (far < 0 || d2[i] < d2[far]) far = i;
    }
    if (far >= 0 && std::sqrt(d2[far]) < best_d + 0.01 * diam)
      ambiguous = project_distance_refined(p, far) < best_d + tie_tol;
  }
  Projection out;
  out.s = best_s;
  Point foot = eval(out.s);
  Point tan = derivative(out.s);
  double side = cross(tan, p - foot);  // >0: left of tangent = inside for CCW
  double d = std::abs(p - foot);
  out.signed_distance = side > 0.0 ? -d : d;
  out.ambiguous = ambiguous;
  return out;
}

double JordanCurve::project_distance_refined(Point p, int table_idx) const {
  double s = (double)table_idx / (double)table_pos_.size();
  for (int it = 0; it < 20; ++it) {
    Point g = eval(s), d1 = derivative(s);
    double f = dot(g - p, d1);
    double fp = norm2(d1) + dot(g - p, second_derivative(s));
    if (fp == 0.0) break;
    double step = std::clamp(f / fp, -2e-3, 2e-3);
    s = wrap_param(s - step);
    if (std::abs(step) < 1e-16) break;
  }
  return std::abs(eval(s) - p);
}

JordanCurve JordanCurve::translated(Point t) const {
  JordanCurve c(*this);
  if (kind_ == CurveKind::Fourier) {
    c.coeff_[K_] += t;
  } else {
    for (auto& v : c.verts_) v += t;
  }
  c.reversed_on_load_ = false;
  c.finalize(false);
  return c;
}

JordanCurve JordanCurve::rotated(double angle) const {
  JordanCurve c(*this);
  Point rot = std::polar(1.0, angle);
  if (kind_ == CurveKind::Fourier) {
    for (auto& q : c.coeff_) q *= rot;
  } else {
    for (auto& v : c.verts_) v *= rot;
  }
  c.reversed_on_load_ = false;
  c.finalize(false);
  return c;
}

JordanCurve JordanCurve::scaled(double factor) const {
  if (factor <= 0.0) throw Error(ErrorCode::DomainError, "scale factor must be positive");
  JordanCurve c(*this);
  if (kind_ == CurveKind::Fourier) {
    Point center = c.coeff_[K_];
    for (auto& q : c.coeff_) q *= factor;
    c.coeff_[K_] = center;
  } else {
    Point center = 0.0;
    for (auto& v : c.verts_) center += v;
    center /= (double)c.verts_.size();
    for (auto& v : c.verts_) v = center + factor * (v - center);
  }
  c.reversed_on_load_ = false;
  c.finalize(false);
  return c;
}

Circle smallest_enclosing_circle(const std::vector<Point>& pts_in) {
  // subsample and apply a deterministic shuffle; curve-ordered inputs are
  // adversarial for the incremental method
  std::vector<Point> pts;
  {
    size_t stride = std::max<size_t>(1, pts_in.size() / 512);
    for (size_t i = 0; i < pts_in.size(); i += stride) pts.push_back(pts_in[i]);
    uint64_t state = 0x9e3779b97f4a7c15ull;
    for (size_t i = pts.size() - 1; i > 0; --i) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      size_t j = (size_t)(state >> 33) % (i + 1);
      std::swap(pts[i], pts[j]);
    }
  }
  auto circle_two = [](Point a, Point b) {
    return Circle{0.5 * (a + b), 0.5 * std::abs(a - b)};
  };
  auto circle_three = [](Point a, Point b, Point c) -> Circle {
    double d = 2.0 * cross(b - a, c - a);
    if (std::abs(d) < 1e-30) return Circle{0.0, -1.0};
    double a2 = norm2(a), b2 = norm2(b), c2 = norm2(c);
    double ux = (a2 * (b.imag() - c.imag()) + b2 * (c.imag() - a.imag()) +
                 c2 * (a.imag() - b.imag())) / d;
    double uy = (a2 * (c.real() - b.real()) + b2 * (a.real() - c.real()) +
                 c2 * (b.real() - a.real())) / d;
    Point u(ux, uy);
    return Circle{u, std::abs(u - a)};
  };
  auto contains = [](const Circle& c, Point p) {
    return std::abs(p - c.center) <= c.radius * (1.0 + 1e-12) + 1e-14;
  };
  Circle c{pts[0], 0.0};
  for (size_t i = 1; i < pts.size(); ++i) {
    if (contains(c, pts[i])) continue;
    c = Circle{pts[i], 0.0};
    for (size_t j = 0; j < i; ++j) {
      if (contains(c, pts[j])) continue;
      c = circle_two(pts[i], pts[j]);
      for (size_t k = 0; k < j; ++k) {
        if (contains(c, pts[k])) continue;
        Circle cand = circle_three(pts[i], pts[j], pts[k]);
        if (cand.radius >= 0.0) c = cand;
      }
    }
  }
  return c;
}

}  // namespace trapeze
