#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "baf/builders.hpp"
#include "baf/flip_graph.hpp"
#include "baf/flips.hpp"

using namespace baf;
namespace {
constexpr double kPi = std::numbers::pi;

Surface relabeled_square_torus() {
  // Same square torus as build_square_torus(), with the triangle ids swapped
  // and each triangle's corners cyclically rotated.
  cpx i{0.0, 1.0};
  Triangle t0{{cpx(1.0) + i, cpx(0.0), cpx(1.0)}};  // rotation of (0, 1, 1+i)
  Triangle t1{{cpx(1.0) + i, i, cpx(0.0)}};         // rotation of (0, 1+i, i)
  // Original gluings: (0,2)-(1,0) diagonal, (0,0)-(1,1) bottom-top,
  // (0,1)-(1,2) right-left; relabel triangles 0<->1 and shift edges by the
  // corner rotations (old corner k of t0 is new corner k+2; of t1, k+1).
  return Surface::build({t1, t0}, {{{1, 0}, {0, 2}}, {{1, 1}, {0, 0}}, {{1, 2}, {0, 1}}});
}
}  // namespace

TEST_CASE("canonical key is invariant under relabeling") {
  Surface a = build_square_torus();
  Surface b = relabeled_square_torus();
  CHECK(a.euler_info().genus == b.euler_info().genus);
  CHECK(canonical_key(a) == canonical_key(b));
  CHECK(canonical_key(a) != canonical_key(build_hex_torus()));
}

TEST_CASE("flipping an edge twice restores the canonical key") {
  Surface s = build_dilation_torus(kPi / 3, 2.0);
  TriangulationKey k0 = canonical_key(s);
  for (HalfEdgeRef e : s.interior_edges()) {
    QuadView q = quad_of_edge(s, e);
    if (!q.flippable()) continue;
    FlipResult once = flip(s, e);
    FlipResult back = flip(once.surface, once.inserted);
    CHECK(canonical_key(back.surface) == k0);
  }
}

TEST_CASE("square torus flip graph at depth 0 and 1") {
  Surface s = build_square_torus();
  FlipGraphReport r0 = explore_flip_graph(s, ExploreOptions{1000, 0, -1.0, false});
  CHECK(r0.nodes.size() == 1);
  CHECK(r0.edges.empty());
  CHECK_FALSE(r0.frontier_exhausted);

  FlipGraphReport r1 = explore_flip_graph(s, ExploreOptions{1000, 1, -1.0, false});
  CHECK(r1.nodes.size() > 1);
  for (const FlipGraphNode& n : r1.nodes) CHECK(n.depth <= 1);
  CHECK(r1.find(canonical_key(s)) == 0);
}

TEST_CASE("alpha: hexagonal torus attains pi/3 exactly") {
  AlphaResult a = alpha_lower_bound(build_hex_torus(), 1000);
  CHECK(a.alpha_hat == doctest::Approx(kPi / 3).epsilon(1e-12));
  CHECK(a.exact);
}

TEST_CASE("alpha: square torus reaches pi/4 within budget 1000") {
  AlphaResult a = alpha_lower_bound(build_square_torus(), 1000);
  CHECK(a.alpha_hat == doctest::Approx(kPi / 4).epsilon(1e-9));
  CHECK_FALSE(a.exact);  // pi/4 < pi/3 and the flip graph of the torus is infinite
}

TEST_CASE("exploration is deterministic, including the parallel expander") {
  Surface s = build_dilation_torus(0.4 * kPi, 1.5);
  FlipGraphReport serial = explore_flip_graph(s, ExploreOptions{200, 100, -1.0, false});
  FlipGraphReport serial2 = explore_flip_graph(s, ExploreOptions{200, 100, -1.0, false});
  FlipGraphReport parallel = explore_flip_graph(s, ExploreOptions{200, 100, -1.0, true});
  REQUIRE(serial.nodes.size() == parallel.nodes.size());
  REQUIRE(serial.nodes.size() == serial2.nodes.size());
  for (size_t i = 0; i < serial.nodes.size(); ++i) {
    CHECK(serial.nodes[i].key == parallel.nodes[i].key);
    CHECK(serial.nodes[i].key == serial2.nodes[i].key);
    CHECK(serial.nodes[i].depth == parallel.nodes[i].depth);
  }
  CHECK(serial.edges == parallel.edges);
  CHECK(serial.alpha_hat == parallel.alpha_hat);
  CHECK(serial.alpha_witness == parallel.alpha_witness);
}

TEST_CASE("pruning floor marks the report heuristic") {
  FlipGraphReport r =
      explore_flip_graph(build_square_torus(), ExploreOptions{50, 100, kPi / 5, false});
  CHECK(r.heuristic);
  CHECK_FALSE(r.alpha_exact);
  for (const FlipGraphNode& n : r.nodes) CHECK(n.min_angle >= kPi / 5);
}

TEST_CASE("reachability: identity and one flip") {
  Surface s = build_square_torus();
  FlipResult f = flip(s, s.interior_edges().front());
  auto res = verify_reachability(s, {s, f.surface}, 500);
  REQUIRE(res.size() == 2);
  CHECK(res[0].reached);
  CHECK(res[0].flip_distance == 0);
  CHECK(res[0].chain.empty());
  CHECK(res[1].reached);
  CHECK(res[1].flip_distance == 1);
  REQUIRE(res[1].chain.size() == 1);
  // Replaying the chain lands on the target key.
  Surface cur = s;
  for (HalfEdgeRef e : res[1].chain) cur = flip(cur, e).surface;
  CHECK(canonical_key(cur) == canonical_key(f.surface));
}

TEST_CASE("reachability rejects incompatible targets") {
  Surface s = build_square_torus();
  // Same torus with its vertex marked auxiliary: cone data no longer matches.
  cpx i{0.0, 1.0};
  Surface marked = Surface::build(
      {Triangle{{cpx(0.0), cpx(1.0), cpx(1.0) + i}}, Triangle{{cpx(0.0), cpx(1.0) + i, i}}},
      {{{0, 2}, {1, 0}}, {{0, 0}, {1, 1}}, {{0, 1}, {1, 2}}}, {{0, 0}});
  CHECK_THROWS_AS(verify_reachability(s, {marked}, 10), Error);
  CHECK_THROWS_AS(verify_reachability(s, {build_two_cylinder_fixture()}, 10), Error);
}

TEST_CASE("budget must be positive") {
  CHECK_THROWS_AS(explore_flip_graph(build_square_torus(), ExploreOptions{0, 1, -1.0, false}),
                  Error);
}

TEST_CASE("alpha-cylinder bound checker") {
  CylinderRecord ok;
  ok.kind = CylinderKind::Hyperbolic;
  ok.beta = kPi / 2;
  CylinderRecord bad = ok;
  bad.beta = kPi;
  CylinderRecord skipped = bad;
  skipped.interior_aux = {3};
  CylinderRecord flat;
  flat.kind = CylinderKind::Flat;
  flat.beta = 100.0;

  AlphaCylinderReport r = check_alpha_cylinder_bound(kPi / 3, {ok, bad, skipped, flat});
  CHECK(r.checked == 2);
  CHECK(r.skipped_aux == 1);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].record == 1);
  CHECK(r.violations[0].bound == doctest::Approx(kPi - kPi / 3 + 1e-6));
}
