#pragma once

#include <span>
#include <vector>

#include "baf/surface.hpp"

namespace baf {

struct PlacedTriangle {
  int tri = -1;
  Transition place;  // chart of `tri` -> common developing plane
};

/// Development of a dual path of triangles into one plane chart.
struct DevelopedChain {
  std::vector<PlacedTriangle> placements;  // first placed by the identity
  std::vector<HalfEdgeRef> crossings;
  Transition cumulative;  // composition of all crossed transitions
};

/// Develops the triangle strip crossed by `crossings`, starting from
/// `start_tri` placed by the identity. Placements are renormalized when their
/// magnitude leaves [1e-12, 1e12]; the cumulative transition is exact.
DevelopedChain develop_strip(const Surface& s, int start_tri,
                             std::span<const HalfEdgeRef> crossings);

enum class HolonomyClass { Translation, Dilation, General };

struct LoopHolonomy {
  cpx a;
  HolonomyClass cls;
};

/// Linear holonomy derivative of a closed dual path.
LoopHolonomy loop_holonomy(const Surface& s, int start_tri,
                           std::span<const HalfEdgeRef> dual_loop);

/// A closed piecewise-geodesic loop, as a developed polyline with holonomy
/// closure: segments p0->p1->...->p_{m-1}->closure(p0), and the final turn is
/// measured against the image segment closure(p0)->closure(p1).
struct GeodesicLoop {
  std::vector<cpx> points;
  Transition closure;
};

struct LoopIndex {
  double theta;  // total turning, in turns
  cpx holonomy;  // derivative of the closure transition
};

LoopIndex loop_index(const GeodesicLoop& loop);

}  // namespace baf
