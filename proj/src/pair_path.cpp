#include "trapeze/pair_path.hpp"

#include <algorithm>
#include <cmath>

#include "trapeze/errors.hpp"

namespace trapeze {

void PairMotion::add_stage(std::optional<ParamArc> first, std::optional<ParamArc> second) {
  Stage st;
  st.a1 = first;
  st.a2 = second;
  st.hold1 = cur1_;
  st.hold2 = cur2_;
  if (first) cur1_ = first->end();
  if (second) cur2_ = second->end();
  stages_.push_back(st);
}

PointPair PairMotion::at(const JordanCurve& curve, double t) const {
  t = std::clamp(t, 0.0, 1.0);
  double x = t * stages_.size();
  int idx = std::min((int)x, (int)stages_.size() - 1);
  double u = x - idx;
  const Stage& st = stages_[idx];
  double p1 = st.a1 ? st.a1->start + u * st.a1->delta : st.hold1;
  double p2 = st.a2 ? st.a2->start + u * st.a2->delta : st.hold2;
  return {curve.eval(p1), curve.eval(p2)};
}

std::vector<ParamArc> PairMotion::route1() const {
  std::vector<ParamArc> out;
  for (const auto& st : stages_)
    if (st.a1 && st.a1->delta != 0.0) out.push_back(*st.a1);
  return out;
}

std::vector<ParamArc> PairMotion::route2() const {
  std::vector<ParamArc> out;
  for (const auto& st : stages_)
    if (st.a2 && st.a2->delta != 0.0) out.push_back(*st.a2);
  return out;
}

namespace {

double angle_increment(Point a, Point b) {
  // arg(b/a) in (-pi, pi]
  return std::arg(b * std::conj(a));
}

void refine(const std::function<PointPair(double)>& loop, double t0, Point d0, double t1,
            Point d1, int depth, double touch_tol, double* turns, double* min_sep) {
  double inc = angle_increment(d0, d1);
  if ((std::abs(inc) < 0.5 && depth >= 2) || depth > 42) {
    *turns += inc;
    return;
  }
  double tm = 0.5 * (t0 + t1);
  PointPair pm = loop(tm);
  Point dm = pm.z - pm.w;
  double sep = std::abs(dm);
  *min_sep = std::min(*min_sep, sep);
  if (sep < touch_tol)
    throw Error(ErrorCode::DiagonalTouch, "pair loop touches the diagonal");
  refine(loop, t0, d0, tm, dm, depth + 1, touch_tol, turns, min_sep);
  refine(loop, tm, dm, t1, d1, depth + 1, touch_tol, turns, min_sep);
}

}  // namespace

WindingResult winding_of_loop(const std::function<PointPair(double)>& loop, int coarse_n,
                              double touch_tol) {
  WindingResult res;
  res.min_separation = std::numeric_limits<double>::infinity();
  double turns = 0.0;
  PointPair prev = loop(0.0);
  Point dprev = prev.z - prev.w;
  res.min_separation = std::min(res.min_separation, std::abs(dprev));
  for (int i = 1; i <= coarse_n; ++i) {
    double t0 = (double)(i - 1) / coarse_n;
    double t1 = (double)i / coarse_n;
    PointPair cur = loop(t1);
    Point dcur = cur.z - cur.w;
    double sep = std::abs(dcur);
    res.min_separation = std::min(res.min_separation, sep);
    if (sep < touch_tol)
      throw Error(ErrorCode::DiagonalTouch, "pair loop touches the diagonal");
    refine(loop, t0, dprev, t1, dcur, 0, touch_tol, &turns, &res.min_separation);
    dprev = dcur;
  }
  res.turns = turns / kTwoPi;
  res.winding = (int)std::lround(res.turns);
  return res;
}

int winding_number(const std::vector<PointPair>& loop, double diameter) {
  if (loop.size() < 3) throw Error(ErrorCode::DomainError, "loop needs >= 3 samples");
  const double touch = 1e-12 * diameter;
  double turns = 0.0;
  for (size_t i = 0; i < loop.size(); ++i) {
    Point d0 = loop[i].z - loop[i].w;
    Point d1 = loop[(i + 1) % loop.size()].z - loop[(i + 1) % loop.size()].w;
    if (std::abs(d0) < touch || std::abs(d1) < touch)
      throw Error(ErrorCode::DiagonalTouch, "sample separation below 1e-12 * diameter");
    turns += angle_increment(d0, d1);
  }
  turns /= kTwoPi;
  double nearest = std::lround(turns);
  if (std::abs(turns - nearest) > 1e-6)
    throw Error(ErrorCode::DomainError, "winding not integral; refine the loop sampling");
  return (int)nearest;
}

namespace {

// delta of the directed arc from a to b: dir=+1 forward, -1 backward
double arc_delta(double a, double b, int dir) {
  double fwd = wrap_param(b - a);
  if (dir > 0) return fwd == 0.0 ? 0.0 : fwd;
  return fwd == 0.0 ? 0.0 : fwd - 1.0;
}

// true if parameter x lies strictly inside the directed open arc a -> a+delta
bool arc_contains(double a, double delta, double x) {
  if (delta == 0.0) return false;
  double u = delta > 0.0 ? wrap_param(x - a) : wrap_param(a - x);
  double len = std::abs(delta);
  return u > 1e-12 && u < len - 1e-12;
}

// walking from `from` in direction dir, the order in which the three given
// parameters are encountered
std::array<int, 3> encounter_order(double from, int dir, const std::array<double, 3>& params) {
  std::array<double, 3> dist;
  for (int i = 0; i < 3; ++i)
    dist[i] = dir > 0 ? wrap_param(params[i] - from) : wrap_param(from - params[i]);
  std::array<int, 3> idx = {0, 1, 2};
  std::sort(idx.begin(), idx.end(), [&](int i, int j) { return dist[i] < dist[j]; });
  return idx;
}

}  // namespace

std::optional<PairMotion> elegant_pair_motion(const JordanCurve& curve, double s1, double s1p,
                                              double s2, double s2p) {
  (void)curve;
  // p1: z -> z' avoiding w, w'  /  p2: w -> w' avoiding z, z'
  auto pick = [&](double from, double to, double avoid_a,
                  double avoid_b) -> std::optional<ParamArc> {
    for (int dir : {+1, -1}) {
      double d = arc_delta(from, to, dir);
      if (!arc_contains(from, d, avoid_a) && !arc_contains(from, d, avoid_b))
        return ParamArc{from, d};
    }
    return std::nullopt;
  };
  auto a1 = pick(s1, s1p, s2, s2p);
  auto a2 = pick(s2, s2p, s1, s1p);
  if (!a1 || !a2) return std::nullopt;
  PairMotion m(s1, s2);
  m.add_stage(a1, a2);
  return m;
}

std::optional<PairMotion> almost_elegant_pair_motion(const JordanCurve& curve, double s1,
                                                     double s1p, double s2, double s2p) {
  (void)curve;
  // p1: z -> z' through w' then w; p2: w -> w' through z' then z,
  // staggered so the components never coincide
  int dir = 0;
  for (int d : {+1, -1}) {
    auto ord = encounter_order(s1, d, {s2p, s2, s1p});
    if (ord[0] == 0 && ord[1] == 1 && ord[2] == 2) {
      dir = d;
      break;
    }
  }
  if (dir == 0) return std::nullopt;
  {
    auto ord = encounter_order(s2, dir, {s1p, s1, s2p});
    if (!(ord[0] == 0 && ord[1] == 1 && ord[2] == 2)) return std::nullopt;
  }
  auto arc = [&](double a, double b) { return ParamArc{a, arc_delta(a, b, dir)}; };
  PairMotion m(s1, s2);
  m.add_stage(arc(s1, s2p), arc(s2, s1p));  // A with w -> z'
  m.add_stage(arc(s2p, s2), std::nullopt);  // B while p2 idles at z'
  m.add_stage(std::nullopt, arc(s1p, s1));  // p2: z' -> z while p1 idles at w
  m.add_stage(arc(s2, s1p), std::nullopt);  // C: w -> z'
  m.add_stage(std::nullopt, arc(s1, s2p));  // p2: z -> w'
  return m;
}

PairMotion general_pair_motion(const JordanCurve& curve, double s1, double s1p, double s2,
                               double s2p) {
  (void)curve;
  // move p1 first along an arc that avoids w, then p2 along an arc avoiding z'
  auto pick = [&](double from, double to, double avoid) {
    for (int dir : {+1, -1}) {
      double d = arc_delta(from, to, dir);
      if (!arc_contains(from, d, avoid)) return ParamArc{from, d};
    }
    return ParamArc{from, arc_delta(from, to, +1)};
  };
  PairMotion m(s1, s2);
  m.add_stage(pick(s1, s1p, s2), std::nullopt);
  m.add_stage(std::nullopt, pick(s2, s2p, s1p));
  return m;
}

void append_full_wraps(PairMotion& motion, double from1, double from2, int wraps) {
  if (wraps == 0) return;
  double d = wraps > 0 ? 1.0 : -1.0;
  for (int i = 0; i < std::abs(wraps); ++i) {
    motion.add_stage(ParamArc{from1, d}, ParamArc{from2, d});
  }
}

PairPath materialize_pair_path(const JordanCurve& curve, const TrapezoidClass& cls,
                               const PairMotion& motion, PointPair start_pair) {
  PairPath out;
  out.route1 = motion.route1();
  out.route2 = motion.route2();

  const int n_path = 512;
  out.samples.reserve(n_path + 1);
  double min_sep = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= n_path; ++i) {
    PointPair p = motion.at(curve, (double)i / n_path);
    min_sep = std::min(min_sep, std::abs(p.z - p.w));
    out.samples.push_back(p);
  }
  out.min_separation = min_sep;

  // closed loop: motion forward on [0,1/2], trajectory backward on [1/2,1]
  auto loop = [&](double t) -> PointPair {
    if (t <= 0.5) return motion.at(curve, 2.0 * t);
    return flow(cls, 2.0 * (1.0 - t), start_pair);
  };
  WindingResult wr = winding_of_loop(loop, 256, 1e-12 * curve.diameter());
  out.min_separation = std::min(out.min_separation, wr.min_separation);
  if (std::abs(wr.turns - std::lround(wr.turns)) > 1e-6)
    throw Error(ErrorCode::ConstructionFailure, "capping loop winding not integral");
  out.winding = wr.winding;
  return out;
}

}  // namespace trapeze
