#pragma once

#include <array>
#include <vector>

#include "baf/surface.hpp"

namespace baf {

/// Developed quadrilateral around an interior edge. Corners A,B,C,D are in
/// counterclockwise order with the edge as diagonal A-C; triangle (A,B,C) is
/// the developed image of the edge's own triangle, (A,C,D) of its neighbor.
struct QuadView {
  HalfEdgeRef edge;
  std::array<cpx, 4> corners;  // A, B, C, D
  bool distinct_triangles = false;
  bool strictly_convex = false;
  bool embedded = false;

  bool flippable() const { return distinct_triangles && strictly_convex && embedded; }
};

QuadView quad_of_edge(const Surface& s, HalfEdgeRef e);

struct FlipResult {
  Surface surface;
  HalfEdgeRef inserted;         // one half-edge of the new diagonal
  std::vector<int> vertex_map;  // old vertex id -> new vertex id
};

/// Replaces the diagonal of the (strictly convex, embedded) quadrilateral
/// around `e` by the other diagonal. All cone data, genus and triangle count
/// are preserved; auxiliary flags are carried over.
FlipResult flip(const Surface& s, HalfEdgeRef e);

struct SelfFoldedTriangle {
  int tri;
  int apex_vertex;
  double apex_angle;
};

/// Triangles two of whose half-edges are glued to each other. The apex (the
/// corner shared by the two identified sides) is a cone point of angle < pi.
std::vector<SelfFoldedTriangle> self_folded_scan(const Surface& s);

}  // namespace baf
