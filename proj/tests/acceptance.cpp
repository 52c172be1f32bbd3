// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "baf/builders.hpp"
#include "baf/developing.hpp"
#include "baf/flip_graph.hpp"
#include "baf/flips.hpp"
#include "baf/geodesics.hpp"
#include "baf/io.hpp"

using namespace baf;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::pair<std::string, Surface>> all_fixtures() {
  std::vector<std::pair<std::string, Surface>> out;
  for (const auto& [name, spec] : family_registry()) out.emplace_back(name, build_family(name, {}));
  for (const auto& entry : std::filesystem::directory_iterator(BAF_FIXTURES_DIR)) {
    if (entry.path().extension() != ".surf") continue;
    std::ifstream f(entry.path());
    std::stringstream ss;
    ss << f.rdbuf();
    ParsedSurface ps = parse_surface(ss.str());
    out.emplace_back("file:" + ps.name, std::move(ps.surface));
  }
  return out;
}

std::vector<std::pair<double, double>> cone_multiset(const Surface& s) {
  std::vector<std::pair<double, double>> v;
  for (const ConeSummary& c : s.cone_summaries()) v.emplace_back(c.angle, c.dilation);
  std::sort(v.begin(), v.end());
  return v;
}

// The dual loop around a vertex: repeatedly cross the incoming edge of the
// current corner; the vertex lands on corner (o.edge+1) of the next triangle.
std::vector<HalfEdgeRef> vertex_link_loop(const Surface& s, int vertex) {
  CornerRef start = s.corners_of_vertex(vertex).front();
  std::vector<HalfEdgeRef> crossings;
  CornerRef c = start;
  do {
    HalfEdgeRef h{c.tri, (c.edge + 2) % 3};
    crossings.push_back(h);
    HalfEdgeRef o = s.opposite(h);
    c = {o.tri, (o.edge + 1) % 3};
  } while (!(c == start));
  return crossings;
}

struct Gate {
  int failures = 0;
  void report(int idx, const char* what, bool ok, const std::string& detail,
              std::chrono::steady_clock::time_point t0) {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  %2d  %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", idx, what, secs,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
  }
};

}  // namespace

int main() {
  Gate gate;
  auto now = [] { return std::chrono::steady_clock::now(); };

  // 1. Gauss-Bonnet residuals on every builder output and fixture.
  {
    auto t0 = now();
    bool ok = true;
    std::string detail;
    for (const auto& [name, s] : all_fixtures()) {
      GaussBonnetReport gb = s.check_gauss_bonnet();
      if (std::abs(gb.r_angle) >= 1e-9 || std::abs(gb.r_log) >= 1e-9) {
        ok = false;
        detail = name;
      }
    }
    gate.report(1, "Gauss-Bonnet residuals < 1e-9 on all builders and fixtures", ok, detail, t0);
  }

  // 2. F = 4g-4+2n preserved by 1000 random flips.
  {
    auto t0 = now();
    bool ok = true;
    std::string detail;
    std::mt19937 rng(20260826);
    int flips_done = 0;
    auto fixtures = all_fixtures();
    for (size_t fi = 0; flips_done < 1000; fi = (fi + 1) % fixtures.size()) {
      Surface s = fixtures[fi].second;
      if (s.has_boundary()) continue;
      for (int step = 0; step < 40 && flips_done < 1000; ++step) {
        std::vector<HalfEdgeRef> cand;
        for (HalfEdgeRef e : s.interior_edges())
          if (quad_of_edge(s, e).flippable()) cand.push_back(e);
        if (cand.empty()) break;
        s = flip(s, cand[rng() % cand.size()]).surface;
        ++flips_done;
        SurfaceInfo info = s.euler_info();
        // Marked points of the triangulation = all vertices, aux included.
        if (info.F != 4 * info.genus - 4 + 2 * info.V) {
          ok = false;
          detail = fixtures[fi].first;
        }
      }
    }
    gate.report(2, "F = 4g-4+2n preserved by 1000 random flips", ok, detail, t0);
  }

  // 3. Flip involution and cone conservation, 1000 random flippable edges.
  {
    auto t0 = now();
    bool ok = true;
    std::string detail;
    std::mt19937 rng(403);
    int checked = 0;
    auto fixtures = all_fixtures();
    for (size_t fi = 0; checked < 1000; fi = (fi + 1) % fixtures.size()) {
      Surface s = fixtures[fi].second;
      for (int step = 0; step < 40 && checked < 1000; ++step) {
        std::vector<HalfEdgeRef> cand;
        for (HalfEdgeRef e : s.interior_edges())
          if (quad_of_edge(s, e).flippable()) cand.push_back(e);
        if (cand.empty()) break;
        HalfEdgeRef e = cand[rng() % cand.size()];
        TriangulationKey key = canonical_key(s);
        auto cones = cone_multiset(s);
        FlipResult f1 = flip(s, e);
        FlipResult f2 = flip(f1.surface, f1.inserted);
        ++checked;
        if (canonical_key(f2.surface) != key) {
          ok = false;
          detail = fixtures[fi].first + ": key mismatch";
        }
        auto cones1 = cone_multiset(f1.surface);
        if (cones1.size() != cones.size()) {
          ok = false;
          detail = fixtures[fi].first + ": cone count";
        } else {
          for (size_t i = 0; i < cones.size(); ++i)
            if (std::abs(cones[i].first - cones1[i].first) > 1e-9 ||
                std::abs(cones[i].second - cones1[i].second) > 1e-9) {
              ok = false;
              detail = fixtures[fi].first + ": cone drift";
            }
        }
        s = f1.surface;  // random-walk onward
      }
    }
    gate.report(3, "flip involution + cone conservation on 1000 random flippable edges", ok,
                detail, t0);
  }

  // 4. Alpha values: hex torus pi/3 exact, square torus pi/4 at budget 1000.
  {
    auto t0 = now();
    AlphaResult hex = alpha_lower_bound(build_hex_torus(), 1000);
    AlphaResult sq = alpha_lower_bound(build_square_torus(), 1000);
    bool ok = std::abs(hex.alpha_hat - kPi / 3) < 1e-9 && hex.exact &&
              std::abs(sq.alpha_hat - kPi / 4) < 1e-9;
    char d[128];
    std::snprintf(d, sizeof d, "hex %.12g exact=%d, square %.12g", hex.alpha_hat,
                  hex.exact ? 1 : 0, sq.alpha_hat);
    gate.report(4, "alpha: hex = pi/3 (exact), square = pi/4 (budget 1000)", ok, d, t0);
  }

  // 5. Cylinder detection values and the non-triangulable verdict.
  {
    auto t0 = now();
    bool ok = true;
    std::string detail;
    auto recs = detect_cylinders(build_dilation_torus(kPi / 3, 2.0), 6);
    int hyp = 0;
    for (const CylinderRecord& r : recs)
      if (r.kind == CylinderKind::Hyperbolic) {
        ++hyp;
        if (std::abs(r.a - 2.0) > 1e-9 || std::abs(r.beta - kPi / 3) > 1e-6) {
          ok = false;
          detail = "dilation torus record off";
        }
      }
    if (hyp != 1) {
      ok = false;
      detail = "dilation torus: " + std::to_string(hyp) + " hyperbolic records";
    }
    Surface big = build_big_cylinder(1.2 * kPi, 2.0, 3);
    auto brecs = detect_cylinders(big, 8);
    bool wide = false;
    for (const CylinderRecord& r : brecs)
      if (r.kind == CylinderKind::Hyperbolic && std::abs(r.beta - 1.2 * kPi) < 1e-6) wide = true;
    if (!wide) {
      ok = false;
      detail = "big cylinder beta missing";
    }
    if (triangulability_verdict(big, 8).verdict != Verdict::NotTriangulableAtSingularities) {
      ok = false;
      detail = "big cylinder verdict";
    }
    gate.report(5, "cylinders: dilation torus (a=2, beta=pi/3); big cylinder 1.2pi, not "
                   "triangulable", ok, detail, t0);
  }

  // 6. beta <= pi - alpha_hat + 1e-6 for every marked-surface hyperbolic cylinder.
  {
    auto t0 = now();
    bool ok = true;
    std::string detail;
    for (const auto& [name, s] : all_fixtures()) {
      if (s.has_boundary()) continue;
      double alpha_hat = alpha_lower_bound(s, 200).alpha_hat;
      AlphaCylinderReport rep = check_alpha_cylinder_bound(alpha_hat, detect_cylinders(s, 8));
      if (!rep.violations.empty()) {
        ok = false;
        char d[128];
        std::snprintf(d, sizeof d, "%s: beta %.6g > bound %.6g", name.c_str(),
                      rep.violations[0].beta, rep.violations[0].bound);
        detail = d;
      }
    }
    gate.report(6, "every hyperbolic beta <= pi - alpha_hat + 1e-6 on every fixture", ok, detail,
                t0);
  }

  // 7. Two-cylinder fixture: sampled interiors disjoint.
  {
    auto t0 = now();
    Surface s = build_two_cylinder_fixture();
    auto recs = detect_cylinders(s, 10);
    int wide = 0;
    for (const CylinderRecord& r : recs)
      if (r.kind == CylinderKind::Hyperbolic && r.beta >= kPi / 2) ++wide;
    auto viol = cylinder_disjointness_check(s, recs);
    bool ok = wide >= 2 && viol.empty();
    char d[96];
    std::snprintf(d, sizeof d, "%d wide cylinders, %zu violations", wide, viol.size());
    gate.report(7, "two-cylinder fixture: sampled cylinder interiors disjoint", ok, d, t0);
  }

  // 8. Limit cycles with contraction 0.5 from 20 random starts.
  {
    auto t0 = now();
    Surface s = build_dilation_torus(kPi / 3, 2.0);
    auto recs = detect_cylinders(s, 6);
    cpx fp;
    for (const CylinderRecord& r : recs)
      if (r.kind == CylinderKind::Hyperbolic) fp = r.fixed_point;
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> U(0.05, 0.95);
    int good = 0;
    for (int trial = 0; trial < 20; ++trial) {
      const Triangle& t = s.triangle(trial % 2);
      double u = U(rng), v = U(rng) * (1.0 - u);
      cpx at = t[0] * (1.0 - u - v) + t[1] * u + t[2] * v;
      // Direction inside the cylinder's sector: radial from the fixed point,
      // with a small jitter.
      double phi = std::arg(at - fp) + (U(rng) - 0.5) * 0.4;
      auto ev = trace(s, trial % 2, at, std::polar(1.0, phi), 500);
      if (const auto* lc = std::get_if<LimitCycle>(&ev.back()))
        if (std::abs(lc->contraction - 0.5) < 1e-6) ++good;
    }
    gate.report(8, "20 random starts on dilation torus reach a limit cycle, contraction 0.5",
                good == 20, std::to_string(good) + "/20", t0);
  }

  // 9. Every saddle-connection triangulation of the square torus at depth <= 4
  //    is reached by a flip chain from the base triangulation.
  {
    auto t0 = now();
    Surface base = build_square_torus();
    auto sc = enumerate_saddle_connections(base, 4);
    std::vector<cpx> vecs;
    for (const SaddleConnection& c : sc) vecs.push_back(c.vec);
    // Torus triangulations = unimodular bases (u, v): two triangles of the
    // parallelogram spanned by u and v, cut along u+v.
    std::vector<Surface> targets;
    std::set<TriangulationKey> seen;
    for (size_t i = 0; i < vecs.size(); ++i)
      for (size_t j = 0; j < vecs.size(); ++j) {
        if (i == j) continue;
        cpx u = vecs[i], v = vecs[j];
        if (std::abs(cross(u, v) - 1.0) > 1e-9) continue;  // not an oriented basis
        Surface t = build_from_polygon({cpx(0.0), u, u + v, v}, {{0, 2}, {1, 3}});
        if (seen.insert(canonical_key(t)).second) targets.push_back(std::move(t));
      }
    auto res = verify_reachability(base, targets, 20000);
    int reached = 0;
    for (const ReachabilityResult& r : res) reached += r.reached ? 1 : 0;
    bool ok = !targets.empty() && reached == static_cast<int>(targets.size());
    char d[96];
    std::snprintf(d, sizeof d, "%d/%zu triangulations reached", reached, targets.size());
    gate.report(9, "all depth<=4 saddle-connection triangulations of the square torus reached",
                ok, d, t0);
  }

  // 10. Star spheres: exactly 3 self-folded triangles, apex angles < pi.
  {
    auto t0 = now();
    bool ok = true;
    std::string detail;
    std::mt19937 rng(7177);
    std::uniform_real_distribution<double> A(0.1, kPi - 0.1), R(0.2, 0.8), S(0.3, 1.4);
    for (int draw = 0; draw < 100 && ok; ++draw) {
      std::array<double, 3> th{A(rng), A(rng), A(rng)};
      std::array<double, 3> ra{R(rng), R(rng), R(rng)};
      Surface s = build_star_sphere(th, ra, cpx(R(rng), S(rng)));
      auto folded = self_folded_scan(s);
      if (folded.size() != 3) {
        ok = false;
        detail = "count " + std::to_string(folded.size());
        break;
      }
      std::vector<double> apex;
      for (const SelfFoldedTriangle& f : folded) {
        if (f.apex_angle >= kPi - 1e-9) {
          ok = false;
          detail = "apex angle >= pi";
        }
        apex.push_back(f.apex_angle);
      }
      std::vector<double> want(th.begin(), th.end());
      std::sort(apex.begin(), apex.end());
      std::sort(want.begin(), want.end());
      for (int k = 0; k < 3; ++k)
        if (std::abs(apex[k] - want[k]) > 1e-9) {
          ok = false;
          detail = "apex angle != theta_i";
        }
    }
    gate.report(10, "100 random star spheres: exactly 3 self-folded triangles, apices < pi", ok,
                detail, t0);
  }

  // 11. 2*pi*Theta == arg rho (mod 2pi) within 1e-9 for 200 sampled loops.
  {
    auto t0 = now();
    bool ok = true;
    int sampled = 0;
    std::string detail;
    std::mt19937 rng(515);
    std::uniform_real_distribution<double> U(0.2, 0.8);
    auto check_loop = [&](const GeodesicLoop& loop, const std::string& name) {
      LoopIndex li = loop_index(loop);
      double d = std::remainder(2 * kPi * li.theta - std::arg(li.holonomy), 2 * kPi);
      ++sampled;
      if (std::abs(d) > 1e-9) {
        ok = false;
        detail = name;
      }
    };
    auto fixtures = all_fixtures();
    for (int round = 0; sampled < 200; ++round) {
      for (const auto& [name, s] : fixtures) {
        if (sampled >= 200) break;
        SurfaceInfo info = s.euler_info();
        for (int v = 0; v < info.V && sampled < 200; ++v) {
          // Vertex-link loop: points taken in each triangle around the vertex.
          auto crossings = vertex_link_loop(s, v);
          DevelopedChain chain = develop_strip(s, crossings.front().tri, crossings);
          std::vector<cpx> pts;
          for (size_t i = 0; i + 1 < chain.placements.size(); ++i) {
            const Triangle& t = s.triangle(chain.placements[i].tri);
            cpx c = (t[0] + t[1] + t[2]) / 3.0;
            CornerRef corner{chain.placements[i].tri, 0};
            for (const CornerRef& cr : s.corners_of_vertex(v))
              if (cr.tri == chain.placements[i].tri) corner = cr;
            cpx apexp = t[corner.edge];
            double w = U(rng);
            pts.push_back(chain.placements[i].place(apexp + w * (c - apexp)));
          }
          try {
            check_loop({pts, chain.cumulative.inverse()}, name + " link v" + std::to_string(v));
          } catch (const Error&) {
            // Cusp/degenerate polyline for this sample; skip, do not count.
          }
        }
        // A triangle boundary (index 1) with random vertices-in-chart.
        const Triangle& t = s.triangle(0);
        try {
          check_loop({{t[0], t[1], t[2]}, Transition{}}, name + " boundary");
        } catch (const Error&) {
        }
      }
    }
    gate.report(11, "200 sampled loops satisfy 2*pi*Theta == arg(rho) (mod 2pi)", ok, detail, t0);
  }

  // 12. Byte-identical explore / sweep / render across 3 runs (one parallel).
  {
    auto t0 = now();
    bool ok = true;
    std::string detail;
    Surface s = build_dilation_torus(0.45 * kPi, 1.8);
    ExploreOptions serial{400, 1000, -1.0, false};
    ExploreOptions par = serial;
    par.parallel = true;
    std::string d1 = flip_graph_dot(explore_flip_graph(s, serial));
    std::string d2 = flip_graph_dot(explore_flip_graph(s, serial));
    std::string d3 = flip_graph_dot(explore_flip_graph(s, par));
    if (d1 != d2 || d1 != d3) {
      ok = false;
      detail = "explore";
    }
    std::string c1 = sweep_family("dilation_torus", "lambda=1.5,2,4", 60, 6);
    std::string c2 = sweep_family("dilation_torus", "lambda=1.5,2,4", 60, 6);
    if (c1 != c2) {
      ok = false;
      detail = "sweep";
    }
    auto recs = detect_cylinders(s, 6);
    RenderOptions ro;
    ro.shade_cylinders = &recs;
    std::string s1 = render_development_svg(s, ro);
    std::string s2 = render_development_svg(s, ro);
    if (s1 != s2) {
      ok = false;
      detail = "render";
    }
    gate.report(12, "explore/sweep/render byte-identical across 3 runs (incl. parallel)", ok,
                detail, t0);
  }

  if (gate.failures) std::printf("%d criteria FAILED\n", gate.failures);
  else std::printf("all 12 criteria passed\n");
  return gate.failures == 0 ? 0 : 1;
}
