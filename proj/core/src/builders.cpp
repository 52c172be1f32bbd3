#include "baf/builders.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

namespace baf {

namespace {
constexpr double kPi = std::numbers::pi;
const cpx kI{0.0, 1.0};
}  // namespace

Surface build_square_torus() {
  std::vector<Triangle> tris = {
      Triangle{{cpx(0), cpx(1), cpx(1) + kI}},
      Triangle{{cpx(0), cpx(1) + kI, kI}},
  };
  std::vector<std::pair<HalfEdgeRef, HalfEdgeRef>> glu = {
      {{0, 2}, {1, 0}},  // diagonal
      {{0, 0}, {1, 1}},  // bottom-top
      {{0, 1}, {1, 2}},  // right-left
  };
  return Surface::build(std::move(tris), glu);
}

Surface build_hex_torus() {
  cpx tau = std::polar(1.0, kPi / 3.0);
  std::vector<Triangle> tris = {
      Triangle{{cpx(0), cpx(1), tau}},
      Triangle{{cpx(1), cpx(1) + tau, tau}},
  };
  std::vector<std::pair<HalfEdgeRef, HalfEdgeRef>> glu = {
      {{0, 1}, {1, 2}},  // shared diagonal
      {{0, 0}, {1, 1}},  // bottom-top
      {{0, 2}, {1, 0}},  // left-right
  };
  return Surface::build(std::move(tris), glu);
}

Surface build_dilation_torus(double theta, double lambda) {
  if (!(theta > 0.0 && theta < kPi))
    fail(ErrorKind::BadParams, "dilation torus requires 0 < theta < pi");
  if (!(lambda > 0.0) || lambda == 1.0)
    fail(ErrorKind::BadParams, "dilation torus requires lambda > 0, lambda != 1");
  double lam = std::max(lambda, 1.0 / lambda);
  cpx e = std::polar(1.0, theta);
  std::vector<Triangle> tris = {
      Triangle{{cpx(1), cpx(lam), lam * e}},
      Triangle{{cpx(1), lam * e, e}},
  };
  std::vector<std::pair<HalfEdgeRef, HalfEdgeRef>> glu = {
      {{0, 2}, {1, 0}},  // diagonal
      {{0, 0}, {1, 1}},  // radial sides, rotation by theta
      {{1, 2}, {0, 1}},  // chords, dilation by lam
  };
  return Surface::build(std::move(tris), glu);
}

Surface build_star_sphere(const std::array<double, 3>& theta, const std::array<double, 3>& ratio,
                          cpx shape) {
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) {
    if (!(theta[i] > 0.0 && theta[i] < kPi))
      fail(ErrorKind::BadParams, "star sphere requires apex angles in (0, pi)");
    if (!(ratio[i] > 0.0)) fail(ErrorKind::BadParams, "star sphere requires positive ratios");
    sum += theta[i];
  }
  if (!(sum < 3.0 * kPi))
    fail(ErrorKind::BadParams, "star sphere requires theta1+theta2+theta3 < 3pi");
  if (!(shape.imag() > 0.0))
    fail(ErrorKind::BadParams, "central shape must have positive imaginary part");

  std::vector<Triangle> tris;
  tris.push_back(Triangle{{cpx(0), cpx(1), shape}});  // central
  std::vector<std::pair<HalfEdgeRef, HalfEdgeRef>> glu;
  for (int i = 0; i < 3; ++i) {
    // Apex A with angle theta[i] between the identified sides [A,0] and [A,1],
    // |A-1| = ratio[i] * |A-0|.
    cpx apex = 1.0 / (1.0 - ratio[i] * std::polar(1.0, theta[i]));
    int t = static_cast<int>(tris.size());
    tris.push_back(Triangle{{apex, cpx(0), cpx(1)}});
    glu.push_back({{t, 0}, {t, 2}});  // identified sides, similarity fixing the apex
    glu.push_back({{t, 1}, {0, i}});  // loop edge onto central side i
  }
  return Surface::build(std::move(tris), glu);
}

Surface build_big_cylinder(double theta, double lambda, int sectors) {
  if (!(theta >= kPi)) fail(ErrorKind::BadParams, "big cylinder requires theta >= pi");
  if (!(lambda > 0.0) || lambda == 1.0)
    fail(ErrorKind::BadParams, "big cylinder requires lambda > 0, lambda != 1");
  if (sectors < 2 || !(theta / sectors < kPi))
    fail(ErrorKind::BadParams, "need sectors >= 2 with theta/sectors < pi");
  double lam = std::max(lambda, 1.0 / lambda);
  const int k = sectors;

  std::vector<Triangle> tris;
  std::vector<std::pair<HalfEdgeRef, HalfEdgeRef>> glu;
  auto inner = [&](int j) { return std::polar(1.0, theta * j / k); };
  for (int j = 0; j < k; ++j) {
    cpx i0 = inner(j), i1 = inner(j + 1);
    // Sector trapezoid (i0, lam*i0, lam*i1, i1), ccw, cut along [i0, lam*i1].
    tris.push_back(Triangle{{i0, lam * i0, lam * i1}});  // t = 2j
    tris.push_back(Triangle{{i0, lam * i1, i1}});        // t = 2j+1
    glu.push_back({{2 * j, 2}, {2 * j + 1, 0}});  // sector diagonal
    glu.push_back({{2 * j + 1, 2}, {2 * j, 1}});  // inner chord -> outer chord, z -> lam*z
    if (j + 1 < k) glu.push_back({{2 * j + 1, 1}, {2 * (j + 1), 0}});  // shared radial side
  }
  glu.push_back({{2 * k - 1, 1}, {0, 0}});  // closing radial sides, rotation by theta

  std::vector<CornerRef> aux;
  for (int j = 1; j < k; ++j) aux.push_back({2 * j, 0});  // intermediate sector vertices
  return Surface::build(std::move(tris), glu, aux);
}

Surface build_two_cylinder_fixture(double theta, double lambda) {
  if (!(theta > 0.0 && theta < kPi))
    fail(ErrorKind::BadParams, "two-cylinder fixture requires 0 < theta < pi");
  if (!(lambda > 0.0) || lambda == 1.0)
    fail(ErrorKind::BadParams, "two-cylinder fixture requires lambda > 0, lambda != 1");
  double lam = std::max(lambda, 1.0 / lambda);
  cpx e = std::polar(1.0, theta);
  double m = (1.0 + lam) / 2.0;
  // Hexagon around one trapezoid sector, ccw, radial sides subdivided at
  // their midpoints; fanned from the midpoint m so no triple is collinear.
  std::array<cpx, 6> h = {cpx(m), cpx(lam), lam * e, m * e, e, cpx(1)};

  std::vector<Triangle> tris;
  std::vector<std::pair<HalfEdgeRef, HalfEdgeRef>> glu;
  for (int b = 0; b < 8; b += 4) {
    for (int j = 0; j < 4; ++j) tris.push_back(Triangle{{h[0], h[j + 1], h[j + 2]}});
    for (int j = 0; j < 3; ++j) glu.push_back({{b + j, 2}, {b + j + 1, 0}});  // fan diagonals
    glu.push_back({{b + 3, 1}, {b + 0, 1}});  // inner chord -> outer chord, z -> lam*z
  }
  // Cross-gluing of the radial half-sides between the two trapezoids; this
  // pairing yields two vertex orbits, hence genus 2, and pairs half-sides of
  // equal length, so the cross transitions are rotations.
  glu.push_back({{0, 0}, {4, 0}});
  glu.push_back({{1, 1}, {5, 1}});
  glu.push_back({{2, 1}, {7, 2}});
  glu.push_back({{3, 2}, {6, 1}});
  return Surface::build(std::move(tris), glu);
}

namespace {

bool segments_properly_intersect(cpx a, cpx b, cpx c, cpx d) {
  double d1 = cross(b - a, c - a), d2 = cross(b - a, d - a);
  double d3 = cross(d - c, a - c), d4 = cross(d - c, b - c);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

bool point_in_triangle(cpx p, cpx a, cpx b, cpx c) {
  double s1 = cross(b - a, p - a), s2 = cross(c - b, p - b), s3 = cross(a - c, p - c);
  return s1 >= 0 && s2 >= 0 && s3 >= 0;
}

}  // namespace

Surface build_from_polygon(const std::vector<cpx>& vertices,
                           const std::vector<std::pair<int, int>>& side_pairing) {
  const int n = static_cast<int>(vertices.size());
  if (n < 3) fail(ErrorKind::NonSimplePolygon, "need at least 3 vertices");
  double area = 0.0;
  for (int i = 0; i < n; ++i) area += cross(vertices[i], vertices[(i + 1) % n]);
  if (!(area > 0.0))
    fail(ErrorKind::NonSimplePolygon, "polygon must be counterclockwise oriented");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;  // adjacent sides
      if (segments_properly_intersect(vertices[i], vertices[(i + 1) % n], vertices[j],
                                      vertices[(j + 1) % n]))
        fail(ErrorKind::NonSimplePolygon, "sides " + std::to_string(i) + " and " +
                                              std::to_string(j) + " intersect");
    }

  // Ear clipping over original vertex indices.
  std::vector<int> ring(n);
  for (int i = 0; i < n; ++i) ring[i] = i;
  std::vector<std::array<int, 3>> ears;
  while (ring.size() > 3) {
    const int m = static_cast<int>(ring.size());
    bool clipped = false;
    for (int i = 0; i < m; ++i) {
      int ia = ring[(i + m - 1) % m], ib = ring[i], ic = ring[(i + 1) % m];
      cpx a = vertices[ia], b = vertices[ib], c = vertices[ic];
      if (!(cross(b - a, c - b) > 0)) continue;  // reflex corner
      bool blocked = false;
      for (int other : ring) {
        if (other == ia || other == ib || other == ic) continue;
        if (point_in_triangle(vertices[other], a, b, c)) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      ears.push_back({ia, ib, ic});
      ring.erase(ring.begin() + i);
      clipped = true;
      break;
    }
    if (!clipped) fail(ErrorKind::NonSimplePolygon, "ear clipping failed");
  }
  ears.push_back({ring[0], ring[1], ring[2]});

  std::vector<Triangle> tris;
  std::map<std::pair<int, int>, HalfEdgeRef> by_ends;
  for (const auto& ear : ears) {
    int t = static_cast<int>(tris.size());
    tris.push_back(Triangle{{vertices[ear[0]], vertices[ear[1]], vertices[ear[2]]}});
    for (int k = 0; k < 3; ++k) by_ends[{ear[k], ear[(k + 1) % 3]}] = {t, k};
  }

  std::vector<std::pair<HalfEdgeRef, HalfEdgeRef>> glu;
  for (const auto& [ends, h] : by_ends) {
    auto rev = by_ends.find({ends.second, ends.first});
    if (rev != by_ends.end() && ends.first < ends.second) glu.push_back({h, rev->second});
  }

  std::vector<char> used(n, 0);
  for (auto [i, j] : side_pairing) {
    if (i < 0 || i >= n || j < 0 || j >= n || i == j)
      fail(ErrorKind::BadPairing, "invalid side indices");
    if (used[i] || used[j]) fail(ErrorKind::BadPairing, "side paired twice");
    used[i] = used[j] = 1;
    glu.push_back({by_ends.at({i, (i + 1) % n}), by_ends.at({j, (j + 1) % n})});
  }
  for (int i = 0; i < n; ++i)
    if (!used[i]) fail(ErrorKind::BadPairing, "side " + std::to_string(i) + " left unpaired");

  return Surface::build(std::move(tris), glu);
}

}  // namespace baf
