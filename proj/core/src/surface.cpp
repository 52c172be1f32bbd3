#include "baf/surface.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace baf {

namespace {
constexpr double kPi = std::numbers::pi;

double wrap_pi(double x) {
  x = std::fmod(x + kPi, 2.0 * kPi);
  if (x < 0) x += 2.0 * kPi;
  return x - kPi;
}
}  // namespace

double Triangle::signed_area() const {
  return 0.5 * cross(p[1] - p[0], p[2] - p[0]);
}

double Triangle::sq_diameter() const {
  double d = 0.0;
  for (int k = 0; k < 3; ++k) d = std::max(d, std::norm(p[(k + 1) % 3] - p[k]));
  return d;
}

double Triangle::corner_angle(int k) const {
  cpx u = p[(k + 1) % 3] - p[k];
  cpx v = p[(k + 2) % 3] - p[k];
  return std::atan2(cross(u, v), dot(u, v));
}

HalfEdgeRef Surface::opposite(HalfEdgeRef h) const {
  int o = opp_[h.id()];
  if (o < 0) fail(ErrorKind::BoundaryEdge, "half-edge " + std::to_string(h.tri) + ":" +
                                               std::to_string(h.edge) + " is not glued");
  return HalfEdgeRef::from_id(o);
}

Transition Surface::transition_of(HalfEdgeRef h) const {
  if (!is_glued(h)) fail(ErrorKind::BoundaryEdge, "no transition across a boundary edge");
  return trans_[h.id()];
}

bool Surface::has_aux() const {
  return std::any_of(aux_.begin(), aux_.end(), [](char c) { return c != 0; });
}

Surface Surface::build(std::vector<Triangle> triangles,
                       const std::vector<std::pair<HalfEdgeRef, HalfEdgeRef>>& gluings,
                       const std::vector<CornerRef>& aux) {
  Surface s;
  s.tris_ = std::move(triangles);
  const int nf = s.num_triangles();
  for (int t = 0; t < nf; ++t) {
    const Triangle& tri = s.tris_[t];
    double area = tri.signed_area();
    if (!(area > kRelAreaEps * tri.sq_diameter()))
      fail(ErrorKind::DegenerateTriangle,
           "triangle " + std::to_string(t) + " has signed area " + std::to_string(area));
    double sum = tri.corner_angle(0) + tri.corner_angle(1) + tri.corner_angle(2);
    if (std::abs(sum - kPi) > kTol)
      fail(ErrorKind::DegenerateTriangle,
           "triangle " + std::to_string(t) + " angle sum deviates from pi");
  }

  s.opp_.assign(3 * nf, -1);
  s.trans_.assign(3 * nf, Transition{});
  for (auto [h, g] : gluings) {
    if (h.tri < 0 || h.tri >= nf || g.tri < 0 || g.tri >= nf || h.edge < 0 || h.edge > 2 ||
        g.edge < 0 || g.edge > 2)
      fail(ErrorKind::BadParams, "gluing references an invalid half-edge");
    if (h == g) fail(ErrorKind::DoubleGluing, "half-edge glued to itself");
    if (s.opp_[h.id()] >= 0 || s.opp_[g.id()] >= 0)
      fail(ErrorKind::DoubleGluing, "half-edge glued twice");
    s.opp_[h.id()] = g.id();
    s.opp_[g.id()] = h.id();
    const Triangle& a = s.tris_[h.tri];
    const Triangle& b = s.tris_[g.tri];
    // Edge direction is reversed across the gluing.
    s.trans_[h.id()] =
        affine_through(a[h.edge], a[(h.edge + 1) % 3], b[(g.edge + 1) % 3], b[g.edge]);
    s.trans_[g.id()] =
        affine_through(b[g.edge], b[(g.edge + 1) % 3], a[(h.edge + 1) % 3], a[h.edge]);
  }

  for (int h = 0; h < 3 * nf; ++h)
    if (s.opp_[h] > h) s.interior_edges_.push_back(HalfEdgeRef::from_id(h));

  s.compute_vertices();
  s.compute_cones();
  s.compute_info();

  for (CornerRef c : aux) {
    if (c.tri < 0 || c.tri >= nf || c.edge < 0 || c.edge > 2)
      fail(ErrorKind::BadParams, "auxiliary corner out of range");
    int v = s.corner_vertex_[c.id()];
    const ConeSummary& cs = s.cones_[v];
    if (cs.is_boundary || std::abs(cs.angle - 2.0 * kPi) > kTol ||
        std::abs(cs.dilation - 1.0) > kTol)
      fail(ErrorKind::BadAuxiliary, "auxiliary vertex " + std::to_string(v) +
                                        " is not a regular point (theta=" +
                                        std::to_string(cs.angle) +
                                        ", lambda=" + std::to_string(cs.dilation) + ")");
    s.aux_[v] = 1;
    s.cones_[v].is_aux = true;
  }
  s.info_.n = 0;
  for (int v = 0; v < s.num_vertices_; ++v)
    if (!s.aux_[v]) ++s.info_.n;

  if (s.info_.closed && s.info_.genus == 0 && s.num_vertices_ < 3)
    throw std::logic_error("closed genus-0 surface with fewer than 3 vertices");
  if (s.info_.closed && s.info_.F != 4 * s.info_.genus - 4 + 2 * s.info_.V)
    throw std::logic_error("triangle count law F = 4g-4+2V violated");
  return s;
}

void Surface::compute_vertices() {
  const int nc = 3 * num_triangles();
  corner_vertex_.assign(nc, -1);
  vertex_corners_.clear();

  auto next_corner = [&](CornerRef c) -> CornerRef {
    // Rotate around the vertex across the outgoing half-edge.
    int o = opp_[c.id()];
    if (o < 0) return {-1, -1};
    HalfEdgeRef oh = HalfEdgeRef::from_id(o);
    return {oh.tri, (oh.edge + 1) % 3};
  };
  auto prev_corner = [&](CornerRef c) -> CornerRef {
    int o = opp_[3 * c.tri + (c.edge + 2) % 3];
    if (o < 0) return {-1, -1};
    return HalfEdgeRef::from_id(o);
  };

  for (int cid = 0; cid < nc; ++cid) {
    if (corner_vertex_[cid] >= 0) continue;
    CornerRef c0 = HalfEdgeRef::from_id(cid);
    // Rewind to a boundary start if there is one.
    CornerRef start = c0;
    for (int guard = 0; guard <= nc; ++guard) {
      CornerRef p = prev_corner(start);
      if (p.tri < 0 || p == c0) break;
      start = p;
      if (guard == nc) throw std::logic_error("vertex link walk does not terminate");
    }
    int v = static_cast<int>(vertex_corners_.size());
    std::vector<CornerRef> orbit;
    CornerRef c = start;
    for (int guard = 0; guard <= nc; ++guard) {
      if (corner_vertex_[c.id()] >= 0) break;  // closed the interior cycle
      corner_vertex_[c.id()] = v;
      orbit.push_back(c);
      CornerRef n = next_corner(c);
      if (n.tri < 0) break;  // boundary end
      c = n;
    }
    vertex_corners_.push_back(std::move(orbit));
  }
  num_vertices_ = static_cast<int>(vertex_corners_.size());
  aux_.assign(num_vertices_, 0);
}

void Surface::compute_cones() {
  cones_.clear();
  for (int v = 0; v < num_vertices_; ++v) {
    const auto& orbit = vertex_corners_[v];
    ConeSummary cs;
    cs.vertex = v;
    for (CornerRef c : orbit) cs.angle += tris_[c.tri].corner_angle(c.edge);
    cs.holonomy_arg = cs.angle;

    CornerRef last = orbit.back();
    bool interior = is_glued({last.tri, last.edge});
    cs.is_boundary = !interior;
    if (interior) {
      Transition g;  // link holonomy around the vertex, based at orbit[0]
      for (CornerRef c : orbit) g = trans_[c.id()].compose(g);
      cs.dilation = std::abs(g.a);
      double mismatch = wrap_pi(std::arg(g.a) - cs.holonomy_arg);
      if (std::abs(mismatch) > kTol)
        throw std::logic_error("vertex link holonomy argument mismatch");
      cpx p = tris_[orbit[0].tri][orbit[0].edge];
      double scale = std::sqrt(tris_[orbit[0].tri].sq_diameter());
      if (std::abs(g(p) - p) > 1e-9 * std::max(1.0, scale) * std::max(1.0, cs.dilation))
        throw std::logic_error("vertex link holonomy does not fix the vertex");
    } else {
      cs.dilation = 1.0;
    }
    cones_.push_back(cs);
  }
}

void Surface::compute_info() {
  const int nf = num_triangles();
  info_ = SurfaceInfo{};
  info_.F = nf;
  info_.V = num_vertices_;
  int boundary_halfedges = 0;
  for (int h = 0; h < 3 * nf; ++h)
    if (opp_[h] < 0) ++boundary_halfedges;
  info_.E = static_cast<int>(interior_edges_.size()) + boundary_halfedges;
  info_.chi = info_.V - info_.E + info_.F;
  info_.closed = boundary_halfedges == 0;
  info_.n = info_.V;

  if (info_.closed) {
    if ((2 - info_.chi) % 2 != 0) fail(ErrorKind::NonOrientable, "odd Euler characteristic");
    info_.genus = (2 - info_.chi) / 2;
    info_.boundary_components = 0;
  } else {
    info_.genus = -1;
    // Walk boundary cycles.
    std::vector<char> seen(3 * nf, 0);
    for (int h0 = 0; h0 < 3 * nf; ++h0) {
      if (opp_[h0] >= 0 || seen[h0]) continue;
      ++info_.boundary_components;
      int h = h0;
      while (!seen[h]) {
        seen[h] = 1;
        HalfEdgeRef he = HalfEdgeRef::from_id(h);
        CornerRef c{he.tri, (he.edge + 1) % 3};
        // Rotate around the head vertex to the next boundary half-edge.
        while (opp_[c.id()] >= 0) {
          HalfEdgeRef oh = HalfEdgeRef::from_id(opp_[c.id()]);
          c = {oh.tri, (oh.edge + 1) % 3};
        }
        h = c.id();
      }
    }
  }
}

GaussBonnetReport Surface::check_gauss_bonnet() const {
  if (!info_.closed) fail(ErrorKind::HasBoundary, "Gauss-Bonnet requires a closed surface");
  double angle_sum = 0.0, log_sum = 0.0;
  for (const ConeSummary& cs : cones_) {
    angle_sum += cs.angle - 2.0 * kPi;
    log_sum += std::log(cs.dilation);
  }
  GaussBonnetReport r;
  r.r_angle = std::abs(angle_sum - 2.0 * kPi * (2 * info_.genus - 2));
  r.r_log = std::abs(log_sum);
  return r;
}

double Surface::min_corner_angle() const {
  double m = kPi;
  for (const Triangle& t : tris_)
    for (int k = 0; k < 3; ++k) m = std::min(m, t.corner_angle(k));
  return m;
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorKind::DoubleGluing: return "DoubleGluing";
    case ErrorKind::BadAuxiliary: return "BadAuxiliary";
    case ErrorKind::BoundaryEdge: return "BoundaryEdge";
    case ErrorKind::HasBoundary: return "HasBoundary";
    case ErrorKind::NonOrientable: return "NonOrientable";
    case ErrorKind::DisconnectedPath: return "DisconnectedPath";
    case ErrorKind::BoundaryCrossing: return "BoundaryCrossing";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::ZeroLengthSegment: return "ZeroLengthSegment";
    case ErrorKind::AmbiguousTurning: return "AmbiguousTurning";
    case ErrorKind::NotFlippable: return "NotFlippable";
    case ErrorKind::BudgetZero: return "BudgetZero";
    case ErrorKind::IncompatibleTargets: return "IncompatibleTargets";
    case ErrorKind::StartOnEdge: return "StartOnEdge";
    case ErrorKind::ZeroDirection: return "ZeroDirection";
    case ErrorKind::InvalidStrip: return "InvalidStrip";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::NonSimplePolygon: return "NonSimplePolygon";
    case ErrorKind::BadPairing: return "BadPairing";
    case ErrorKind::SyntaxError: return "SyntaxError";
  }
  return "UnknownError";
}

}  // namespace baf
