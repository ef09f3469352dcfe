#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "trapeze/curve.hpp"
#include "trapeze/trapezoid_map.hpp"

namespace trapeze {

// directed walk along the parameter circle: from `start`, advance by the
// signed amount `delta` (|delta| may exceed 1 for full wraps)
struct ParamArc {
  double start = 0.0;
  double delta = 0.0;
  double end() const { return start + delta; }
};

// piecewise schedule of two points moving along the curve; in any stage one
// or both components move, the other holds position
class PairMotion {
 public:
  PairMotion(double start1, double start2) : cur1_(start1), cur2_(start2) {}
  void add_stage(std::optional<ParamArc> first, std::optional<ParamArc> second);
  bool empty() const { return stages_.empty(); }

  // positions at schedule time t in [0,1] (stages get equal time slices)
  PointPair at(const JordanCurve& curve, double t) const;
  // parameter routes swept by each component
  std::vector<ParamArc> route1() const;
  std::vector<ParamArc> route2() const;
  // endpoint parameters
  double end_param1() const { return cur1_; }
  double end_param2() const { return cur2_; }

 private:
  struct Stage {
    std::optional<ParamArc> a1, a2;
    double hold1 = 0.0, hold2 = 0.0;  // positions while idle
  };
  std::vector<Stage> stages_;
  double cur1_ = 0.0, cur2_ = 0.0;
};

struct PairPath {
  std::vector<PointPair> samples;  // from (z,w) to (z',w'), both components on the curve
  double min_separation = 0.0;
  // winding of z-w around 0 along the closed loop (path forward, trajectory
  // backward); integral and stable under refinement
  int winding = 0;
  std::vector<ParamArc> route1, route2;
  bool used_corrector_loop = false;
};

// winding of t -> z(t)-w(t) around 0 for a closed loop given as a callback;
// samples are refined until argument increments are small
struct WindingResult {
  double turns = 0.0;  // before rounding
  int winding = 0;
  double min_separation = 0.0;
};
WindingResult winding_of_loop(const std::function<PointPair(double)>& loop, int coarse_n,
                              double touch_tol);

// accumulated-argument winding of a closed sampled pair loop;
// throws DiagonalTouch if any sample separation < 1e-12 * diameter
int winding_number(const std::vector<PointPair>& loop, double diameter);

// capping-path recipes; each returns the motion or nothing when the visiting
// order does not admit the recipe's arcs
std::optional<PairMotion> elegant_pair_motion(const JordanCurve& curve, double s1, double s1p,
                                              double s2, double s2p);
std::optional<PairMotion> almost_elegant_pair_motion(const JordanCurve& curve, double s1,
                                                     double s1p, double s2, double s2p);
PairMotion general_pair_motion(const JordanCurve& curve, double s1, double s1p, double s2,
                               double s2p);

// materialize a motion: sample it, close the loop with the trajectory of the
// flow run backward, and compute winding and min separation
PairPath materialize_pair_path(const JordanCurve& curve, const TrapezoidClass& cls,
                               const PairMotion& motion, PointPair start_pair);

// winding-correction wraps appended to a motion (both components advance
// `wraps` full loops; sign gives direction)
void append_full_wraps(PairMotion& motion, double from1, double from2, int wraps);

}  // namespace trapeze
