#include "rlcm/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace rlcm {

Ball enumerate_ball(const AdsSpec& spec, int depth, long window, size_t cap) {
  if (depth < 0 || window < 0) throw std::invalid_argument("enumerate_ball: negative bounds");
  std::vector<MonoidElement> ps = monoid_ball(spec.monoid, depth);
  double g_count = 1.0;
  for (int i = 0; i < spec.group_rank; ++i) g_count *= 2.0 * window + 1.0;
  if (g_count * ps.size() > static_cast<double>(cap)) {
    throw std::invalid_argument("enumerate_ball: element cap exceeded");
  }
  Ball ball{depth, window, {}};
  Vec g(spec.group_rank, Int(-window));
  for (const auto& p : ps) {
    for (auto& x : g) x = -window;
    while (true) {
      ball.elements.push_back(SemidirectElement{g, p});
      int i = spec.group_rank - 1;
      for (; i >= 0; --i) {
        if (++g[i] <= window) break;
        g[i] = -window;
      }
      if (i < 0) break;
    }
    if (spec.group_rank == 0) break;
  }
  return ball;
}

OracleFoundationResult oracle_foundation_check(const AdsSpec& spec, const std::vector<SemidirectElement>& f,
                                               const Ball& ball) {
  for (const auto& s : ball.elements) {
    bool meets = false;
    for (const auto& t : f) {
      if (intersect_principal_ideals(spec, s, t)) { meets = true; break; }
    }
    if (!meets) return {false, s};
  }
  return {true, std::nullopt};
}

std::vector<SemidirectElement> oracle_ideal_points(const AdsSpec& spec, const SemidirectElement& a,
                                                   const Ball& ball) {
  std::vector<SemidirectElement> out;
  HnfTransform solver = hnf_with_transform(spec.theta_matrix(a.p));
  for (const auto& x : ball.elements) {
    if (!divides(a.p, x.p)) continue;
    if (solve_with(solver, sub(x.g, a.g))) out.push_back(x);
  }
  return out;
}

}  // namespace rlcm
