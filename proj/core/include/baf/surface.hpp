#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "baf/errors.hpp"
#include "baf/transition.hpp"

namespace baf {

/// Positively oriented planar triangle in its own chart coordinates.
struct Triangle {
  std::array<cpx, 3> p;

  cpx operator[](int k) const { return p[k]; }
  double signed_area() const;
  double sq_diameter() const;
  /// Interior angle at corner k, in (0, pi).
  double corner_angle(int k) const;
};

/// Half-edge (t, e): edge e of triangle t, running from corner e to corner
/// (e+1) mod 3. Also used to reference corners (t, k).
struct HalfEdgeRef {
  int tri = -1;
  int edge = -1;

  int id() const { return 3 * tri + edge; }
  static HalfEdgeRef from_id(int id) { return {id / 3, id % 3}; }
  friend bool operator==(HalfEdgeRef a, HalfEdgeRef b) = default;
  friend auto operator<=>(HalfEdgeRef a, HalfEdgeRef b) = default;
};

using CornerRef = HalfEdgeRef;

/// Cone data of one vertex orbit.
struct ConeSummary {
  int vertex = -1;
  double angle = 0.0;         // cone angle theta (interior) or interior angle sum (boundary)
  double dilation = 1.0;      // |holonomy derivative| of the vertex link
  double holonomy_arg = 0.0;  // continuous-branch argument of the link holonomy
  bool is_boundary = false;
  bool is_aux = false;
};

struct SurfaceInfo {
  int V = 0, E = 0, F = 0;
  int chi = 0;
  int genus = -1;  // closed surfaces only; -1 when there is a boundary
  int n = 0;       // non-auxiliary vertices
  int boundary_components = 0;
  bool closed = false;
};

struct GaussBonnetReport {
  double r_angle = 0.0;  // |sum(theta_i - 2pi) - 2pi(2g-2)|
  double r_log = 0.0;    // |sum log lambda_i|
};

/// Immutable complex of positively oriented affine triangles with half-edge
/// gluings by complex-affine maps. Construction validates the full structure;
/// every instance in circulation satisfies the class invariants, so all
/// queries are pure and total.
class Surface {
 public:
  static constexpr double kRelAreaEps = 1e-12;  // relative to squared diameter
  static constexpr double kTol = 1e-9;

  /// Validating constructor. `aux` marks vertex orbits (given by any corner in
  /// the orbit) as removable marked points; each must be a regular point.
  static Surface build(std::vector<Triangle> triangles,
                       const std::vector<std::pair<HalfEdgeRef, HalfEdgeRef>>& gluings,
                       const std::vector<CornerRef>& aux = {});

  int num_triangles() const { return static_cast<int>(tris_.size()); }
  const Triangle& triangle(int t) const { return tris_[t]; }
  const std::vector<Triangle>& triangles() const { return tris_; }

  bool is_glued(HalfEdgeRef h) const { return opp_[h.id()] >= 0; }
  HalfEdgeRef opposite(HalfEdgeRef h) const;

  /// Chart change across a glued half-edge: maps the chart of h.tri into the
  /// chart of the opposite triangle, sending the edge onto its partner with
  /// reversed direction.
  Transition transition_of(HalfEdgeRef h) const;

  int vertex_of_corner(CornerRef c) const { return corner_vertex_[c.id()]; }
  int num_vertices() const { return num_vertices_; }
  bool is_aux_vertex(int v) const { return aux_[v] != 0; }
  bool has_aux() const;
  /// Corners of a vertex orbit, in link order for interior vertices.
  const std::vector<CornerRef>& corners_of_vertex(int v) const { return vertex_corners_[v]; }

  const std::vector<ConeSummary>& cone_summaries() const { return cones_; }
  SurfaceInfo euler_info() const { return info_; }
  bool has_boundary() const { return !info_.closed; }

  GaussBonnetReport check_gauss_bonnet() const;

  /// Interior (glued) edges in canonical order; index in this list is the
  /// edge id used by flips and the CLI.
  const std::vector<HalfEdgeRef>& interior_edges() const { return interior_edges_; }

  double min_corner_angle() const;

 private:
  Surface() = default;
  void compute_vertices();
  void compute_cones();
  void compute_info();

  std::vector<Triangle> tris_;
  std::vector<int> opp_;           // per half-edge id; -1 = boundary
  std::vector<Transition> trans_;  // per half-edge id; identity on boundary
  std::vector<int> corner_vertex_;
  std::vector<std::vector<CornerRef>> vertex_corners_;
  std::vector<char> aux_;
  int num_vertices_ = 0;
  std::vector<ConeSummary> cones_;
  std::vector<HalfEdgeRef> interior_edges_;
  SurfaceInfo info_;
};

/// Vertex orbits as ConeSummary records (already cached on the surface).
inline const std::vector<ConeSummary>& analyze_vertices(const Surface& s) {
  return s.cone_summaries();
}

}  // namespace baf
