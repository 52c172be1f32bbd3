#include "baf/flips.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace baf {

namespace {
constexpr double kConvEps = 1e-10;  // relative to squared quad diameter
}

QuadView quad_of_edge(const Surface& s, HalfEdgeRef e) {
  if (!s.is_glued(e)) fail(ErrorKind::BoundaryEdge, "cannot build a quad at a boundary edge");
  HalfEdgeRef o = s.opposite(e);
  const Triangle& t1 = s.triangle(e.tri);
  const Triangle& t2 = s.triangle(o.tri);
  Transition into_t1 = s.transition_of(e).inverse();

  QuadView q;
  q.edge = e;
  cpx a = t1[(e.edge + 1) % 3];
  cpx b = t1[(e.edge + 2) % 3];
  cpx c = t1[e.edge];
  cpx d = into_t1(t2[(o.edge + 2) % 3]);
  q.corners = {a, b, c, d};
  q.distinct_triangles = e.tri != o.tri;

  double sq_diam = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) sq_diam = std::max(sq_diam, std::norm(q.corners[i] - q.corners[j]));
  double margin = kConvEps * sq_diam;

  q.strictly_convex = true;
  for (int i = 0; i < 4; ++i) {
    cpx u = q.corners[(i + 1) % 4] - q.corners[i];
    cpx v = q.corners[(i + 2) % 4] - q.corners[(i + 1) % 4];
    if (!(cross(u, v) > margin)) q.strictly_convex = false;
  }
  // B and D strictly on opposite sides of the diagonal A-C.
  double sb = cross(c - a, b - a);
  double sd = cross(c - a, d - a);
  q.embedded = sb < -margin && sd > margin;
  return q;
}

FlipResult flip(const Surface& s, HalfEdgeRef e) {
  QuadView q = quad_of_edge(s, e);
  if (!q.distinct_triangles)
    fail(ErrorKind::NotFlippable, "distinct_triangles is false (self-folded inner edge)");
  if (!q.strictly_convex) fail(ErrorKind::NotFlippable, "strictly_convex is false");
  if (!q.embedded) fail(ErrorKind::NotFlippable, "embedded is false");

  HalfEdgeRef o = s.opposite(e);
  const int t1 = e.tri, t2 = o.tri;
  const int k = e.edge, kp = o.edge;
  const auto [A, B, C, D] = q.corners;

  // New triangles, both in the chart of t1.
  std::vector<Triangle> tris = s.triangles();
  tris[t1] = Triangle{{B, D, A}};
  tris[t2] = Triangle{{B, C, D}};

  // Outer half-edge remap: old (tri, edge) -> new (tri, edge).
  std::map<int, HalfEdgeRef> remap;
  remap[HalfEdgeRef{t1, (k + 1) % 3}.id()] = {t1, 2};  // A -> B
  remap[HalfEdgeRef{t1, (k + 2) % 3}.id()] = {t2, 0};  // B -> C
  remap[HalfEdgeRef{t2, (kp + 1) % 3}.id()] = {t2, 1}; // C -> D
  remap[HalfEdgeRef{t2, (kp + 2) % 3}.id()] = {t1, 1}; // D -> A
  auto map_he = [&](HalfEdgeRef h) {
    auto it = remap.find(h.id());
    return it == remap.end() ? h : it->second;
  };

  std::vector<std::pair<HalfEdgeRef, HalfEdgeRef>> gluings;
  gluings.emplace_back(HalfEdgeRef{t1, 0}, HalfEdgeRef{t2, 2});  // new diagonal B-D
  for (HalfEdgeRef h : s.interior_edges()) {
    HalfEdgeRef p = s.opposite(h);
    if ((h == e && p == o) || (h == o && p == e)) continue;
    gluings.emplace_back(map_he(h), map_he(p));
  }

  // Vertex correspondence: quad corners by label, everything else in place.
  auto old_vertex_of_label = [&](int label) {  // 0=A 1=B 2=C 3=D
    switch (label) {
      case 0: return s.vertex_of_corner({t1, (k + 1) % 3});
      case 1: return s.vertex_of_corner({t1, (k + 2) % 3});
      case 2: return s.vertex_of_corner({t1, k});
      default: return s.vertex_of_corner({t2, (kp + 2) % 3});
    }
  };
  // A corner of the new complex for each old vertex.
  std::vector<CornerRef> new_corner_of_old_vertex(s.num_vertices(), CornerRef{-1, -1});
  const CornerRef label_corner[4] = {{t1, 2}, {t1, 0}, {t2, 1}, {t2, 2}};  // A,B,C,D
  for (int label = 0; label < 4; ++label)
    new_corner_of_old_vertex[old_vertex_of_label(label)] = label_corner[label];
  for (int t = 0; t < s.num_triangles(); ++t) {
    if (t == t1 || t == t2) continue;
    for (int c = 0; c < 3; ++c) new_corner_of_old_vertex[s.vertex_of_corner({t, c})] = {t, c};
  }

  std::vector<CornerRef> aux;
  for (int v = 0; v < s.num_vertices(); ++v)
    if (s.is_aux_vertex(v)) aux.push_back(new_corner_of_old_vertex[v]);

  FlipResult r{Surface::build(std::move(tris), gluings, aux), HalfEdgeRef{t1, 0}, {}};
  r.vertex_map.resize(s.num_vertices());
  for (int v = 0; v < s.num_vertices(); ++v)
    r.vertex_map[v] = r.surface.vertex_of_corner(new_corner_of_old_vertex[v]);
  return r;
}

std::vector<SelfFoldedTriangle> self_folded_scan(const Surface& s) {
  std::vector<SelfFoldedTriangle> out;
  for (int t = 0; t < s.num_triangles(); ++t) {
    for (int e1 = 0; e1 < 3; ++e1) {
      for (int e2 = e1 + 1; e2 < 3; ++e2) {
        HalfEdgeRef h{t, e1};
        if (!s.is_glued(h) || s.opposite(h) != HalfEdgeRef{t, e2}) continue;
        // Shared corner of the two identified sides.
        int apex_corner = (e2 == (e1 + 1) % 3) ? e2 : e1;
        int v = s.vertex_of_corner({t, apex_corner});
        out.push_back({t, v, s.cone_summaries()[v].angle});
      }
    }
  }
  return out;
}

}  // namespace baf
