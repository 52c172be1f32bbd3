#include "baf/developing.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace baf {

namespace {
constexpr double kPi = std::numbers::pi;
}

DevelopedChain develop_strip(const Surface& s, int start_tri,
                             std::span<const HalfEdgeRef> crossings) {
  if (start_tri < 0 || start_tri >= s.num_triangles())
    fail(ErrorKind::DisconnectedPath, "start triangle out of range");
  DevelopedChain chain;
  chain.placements.push_back({start_tri, Transition{}});
  int cur = start_tri;
  Transition place;
  for (HalfEdgeRef h : crossings) {
    if (h.tri != cur)
      fail(ErrorKind::DisconnectedPath, "crossing " + std::to_string(h.tri) + ":" +
                                            std::to_string(h.edge) +
                                            " does not leave the current triangle");
    if (!s.is_glued(h)) fail(ErrorKind::BoundaryCrossing, "crossing an unglued edge");
    Transition g = s.transition_of(h);
    chain.cumulative = g.compose(chain.cumulative);
    place = place.compose(g.inverse());
    double mag = std::abs(place.a);
    if (mag > 1e12 || mag < 1e-12) {
      // Renormalize the developing frame; direction-preserving similarity.
      Transition norm{cpx(1.0 / mag, 0.0), -place.b / mag};
      for (PlacedTriangle& pt : chain.placements) pt.place = norm.compose(pt.place);
      place = norm.compose(place);
    }
    cur = s.opposite(h).tri;
    chain.crossings.push_back(h);
    chain.placements.push_back({cur, place});
  }
  return chain;
}

LoopHolonomy loop_holonomy(const Surface& s, int start_tri,
                           std::span<const HalfEdgeRef> dual_loop) {
  DevelopedChain chain = develop_strip(s, start_tri, dual_loop);
  if (chain.placements.back().tri != start_tri)
    fail(ErrorKind::NotClosed, "dual loop does not return to its start triangle");
  cpx a = chain.cumulative.a;
  HolonomyClass cls = HolonomyClass::General;
  if (std::abs(a - cpx(1.0)) <= 1e-12)
    cls = HolonomyClass::Translation;
  else if (std::abs(a.imag()) <= 1e-12 * std::abs(a) && a.real() > 0.0)
    cls = HolonomyClass::Dilation;
  return {a, cls};
}

LoopIndex loop_index(const GeodesicLoop& loop) {
  const auto& p = loop.points;
  const int m = static_cast<int>(p.size());
  if (m < 1) fail(ErrorKind::NotClosed, "empty loop");

  double scale = 0.0;
  for (int i = 0; i + 1 < m; ++i) scale = std::max(scale, std::abs(p[i + 1] - p[i]));
  scale = std::max(scale, 1e-300);

  std::vector<cpx> seg;
  for (int i = 0; i + 1 < m; ++i) seg.push_back(p[i + 1] - p[i]);
  seg.push_back(loop.closure(p[0]) - p[m - 1]);  // closing segment
  for (const cpx& v : seg)
    if (std::abs(v) <= 1e-12 * scale) fail(ErrorKind::ZeroLengthSegment, "zero-length segment");

  double turning = 0.0;
  for (size_t i = 0; i + 1 < seg.size(); ++i) {
    double ext = signed_angle(seg[i], seg[i + 1]);
    if (std::abs(ext) > kPi - 1e-9)
      fail(ErrorKind::AmbiguousTurning, "exterior angle at a cusp");
    turning += ext;
  }
  // Closing turn: against the holonomy image of the first segment.
  double ext = signed_angle(seg.back(), loop.closure.a * seg.front());
  if (std::abs(ext) > kPi - 1e-9) fail(ErrorKind::AmbiguousTurning, "exterior angle at a cusp");
  turning += ext;

  return {turning / (2.0 * kPi), loop.closure.a};
}

}  // namespace baf
