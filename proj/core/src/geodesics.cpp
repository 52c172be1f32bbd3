#include "baf/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <set>
#include <string>

namespace baf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDeltaV = 1e-9;  // vertex-hit tolerance, relative to local scale

double lift_near(cpx v, double ref) {
  double a = std::arg(v);
  return a + 2 * kPi * std::round((ref - a) / (2 * kPi));
}

}  // namespace

// ---- trace --------------------------------------------------------------

std::vector<TrajectoryEvent> trace(const Surface& s, int tri, cpx at, cpx direction,
                                   int max_crossings) {
  if (std::abs(direction) == 0.0) fail(ErrorKind::ZeroDirection, "zero direction");
  if (tri < 0 || tri >= s.num_triangles())
    fail(ErrorKind::DisconnectedPath, "start triangle out of range");
  {
    const Triangle& t0 = s.triangle(tri);
    double scale = std::sqrt(t0.sq_diameter());
    for (int k = 0; k < 3; ++k) {
      cpx e = t0[(k + 1) % 3] - t0[k];
      double side = cross(e, at - t0[k]);
      if (side <= 1e-12 * scale * std::abs(e))
        fail(ErrorKind::StartOnEdge, "start point not strictly inside its triangle");
    }
  }

  std::vector<TrajectoryEvent> events;
  cpx d = direction / std::abs(direction);
  cpx z = at;            // current point, developing plane
  Transition place;      // chart of `cur` -> developing plane
  int cur = tri;
  int entry = -1;        // edge of `cur` we entered through
  std::vector<HalfEdgeRef> word;
  std::vector<double> params;

  for (int step = 0; step < max_crossings; ++step) {
    const Triangle& t = s.triangle(cur);
    int best = -1;
    double best_s = 0.0, best_t = 0.0;
    for (int k = 0; k < 3; ++k) {
      if (k == entry) continue;
      cpx q0 = place(t[k]), q1 = place(t[(k + 1) % 3]);
      cpx e = q1 - q0;
      double den = cross(d, e);
      if (std::abs(den) < 1e-300) continue;  // ray parallel to the edge
      double sray = cross(q0 - z, e) / den;
      double tpar = cross(d, z - q0) / den;
      // The ray leaves a triangle it is strictly inside: want sray > 0.
      if (sray <= 0.0 || tpar < -0.5 || tpar > 1.5) continue;
      if (best < 0 || sray < best_s) {
        best = k;
        best_s = sray;
        best_t = tpar;
      }
    }
    if (best < 0) {
      // Numerical corner case: treat as a vertex hit at the nearest corner.
      int nearest = 0;
      for (int k = 1; k < 3; ++k)
        if (std::abs(place(t[k]) - z) < std::abs(place(t[nearest]) - z)) nearest = k;
      events.push_back(HitVertex{s.vertex_of_corner({cur, nearest})});
      return events;
    }

    HalfEdgeRef h{cur, best};
    double eps = kDeltaV;  // parameter-space tolerance, relative to edge length
    if (best_t < eps || best_t > 1.0 - eps) {
      int c = best_t < eps ? best : (best + 1) % 3;
      events.push_back(HitVertex{s.vertex_of_corner({cur, c})});
      return events;
    }
    if (!s.is_glued(h)) {
      events.push_back(ExitBoundary{h, best_t});
      return events;
    }
    events.push_back(CrossEdge{h, best_t});
    word.push_back(h);
    params.push_back(best_t);
    z = z + best_s * d;

    // Limit-cycle detection: three consecutive repeats of a cyclic word with a
    // real, positive, non-unit return derivative and monotone parameters.
    int n = static_cast<int>(word.size());
    for (int p = 1; 3 * p <= n; ++p) {
      bool rep = true;
      for (int i = n - 3 * p; i < n - p && rep; ++i) rep = word[i] == word[i + p];
      if (!rep) continue;
      bool mono = true;
      double g1 = std::abs(params[n - 1 - p] - params[n - 1 - 2 * p]);
      double g2 = std::abs(params[n - 1] - params[n - 1 - p]);
      if (!(g2 < g1 || g2 < 1e-15)) mono = false;
      if (!mono) continue;
      // Return derivative of one period (conjugation-invariant).
      Transition ret;
      int rt = word[n - p].tri;
      bool ok = true;
      for (int i = n - p; i < n; ++i) {
        if (word[i].tri != rt) {
          ok = false;
          break;
        }
        ret = s.transition_of(word[i]).compose(ret);
        rt = s.opposite(word[i]).tri;
      }
      if (!ok) continue;
      cpx a = ret.a;
      if (std::abs(a.imag()) > 1e-9 * std::abs(a)) continue;
      if (a.real() <= 0.0 || std::abs(a.real() - 1.0) <= 1e-9) continue;
      double ar = a.real();
      events.push_back(LimitCycle{{word.end() - p, word.end()}, std::min(ar, 1.0 / ar)});
      return events;
    }

    HalfEdgeRef o = s.opposite(h);
    place = place.compose(s.transition_of(o));
    cur = o.tri;
    entry = o.edge;
    double mag = std::abs(place.a);
    if (mag > 1e9 || mag < 1e-9) {
      // Recenter and rescale the developing frame at the crossing point.
      Transition norm{cpx(1.0 / mag, 0.0), cpx(0.0)};
      norm.b = -z / mag;
      place = norm.compose(place);
      z = cpx(0.0);
    }
  }
  events.push_back(BudgetExhausted{});
  return events;
}

// ---- saddle connections ---------------------------------------------------

namespace {

struct SaddleCollector {
  const Surface& s;
  int depth;
  std::map<std::string, SaddleConnection> found;

  static std::string orient_key(CornerRef from, std::span<const HalfEdgeRef> word,
                                CornerRef to) {
    std::string k;
    k += std::to_string(from.id());
    for (HalfEdgeRef h : word) k += "," + std::to_string(h.id());
    k += ";" + std::to_string(to.id());
    return k;
  }

  void emit(CornerRef from, std::vector<HalfEdgeRef> word, CornerRef to, cpx vec) {
    std::vector<HalfEdgeRef> rev(word.rbegin(), word.rend());
    for (HalfEdgeRef& h : rev) h = s.opposite(h);
    std::string ka = orient_key(from, word, to);
    std::string kb = orient_key(to, rev, from);
    std::string key = std::min(ka, kb);
    if (found.count(key)) return;
    found.emplace(std::move(key),
                  SaddleConnection{s.vertex_of_corner(from), s.vertex_of_corner(to), from,
                                   std::move(word), vec});
  }

  // Wedge recursion: apex at the origin-shifted point `apex`; the open cone
  // between vl and vr (ccw, angle < pi) looks through edge `h` of the triangle
  // placed by `place`. `word` is the crossing word so far (ending with h's
  // predecessors); h itself is crossed on entry.
  void recurse(CornerRef from, cpx apex, cpx vl, cpx vr, HalfEdgeRef h, Transition place,
               std::vector<HalfEdgeRef>& word) {
    if (static_cast<int>(word.size()) >= depth) return;
    if (!s.is_glued(h)) return;
    double cone = cross(vl, vr);
    if (!(cone > 1e-12 * std::abs(vl) * std::abs(vr))) return;  // empty wedge

    HalfEdgeRef o = s.opposite(h);
    Transition next = place.compose(s.transition_of(o));
    const Triangle& t = s.triangle(o.tri);
    int far = (o.edge + 2) % 3;  // corner of the far vertex in the next triangle
    cpx w = next(t[far]) - apex;

    word.push_back(h);
    bool left_open = cross(vl, w) > 1e-12 * std::abs(vl) * std::abs(w);
    bool right_open = cross(w, vr) > 1e-12 * std::abs(w) * std::abs(vr);
    if (left_open && right_open)
      emit(from, word, {o.tri, far}, w);

    // Sub-wedges look through the two far edges of the next triangle:
    // [far-side left] edge from head(o)=t[o.edge+? ] ... edges at the far
    // vertex: (o.edge+1) runs head->far, (far) runs far->tail.
    HalfEdgeRef left_edge{o.tri, (o.edge + 1) % 3};
    HalfEdgeRef right_edge{o.tri, far};
    if (left_open)
      recurse(from, apex, vl, right_open ? w : vr, left_edge, next, word);
    if (right_open)
      recurse(from, apex, left_open ? w : vl, vr, right_edge, next, word);
    word.pop_back();
  }
};

}  // namespace

std::vector<SaddleConnection> enumerate_saddle_connections(const Surface& s, int depth) {
  SaddleCollector col{s, depth, {}};
  for (int t = 0; t < s.num_triangles(); ++t) {
    const Triangle& tri = s.triangle(t);
    for (int k = 0; k < 3; ++k) {
      CornerRef from{t, k};
      cpx apex = tri[k];
      cpx u1 = tri[(k + 1) % 3] - apex;
      cpx u2 = tri[(k + 2) % 3] - apex;
      // The two triangle sides at this corner are saddle connections; their
      // key is the undirected edge so each geometric edge appears once.
      auto direct = [&](HalfEdgeRef h, CornerRef to, cpx vec) {
        int id = h.id();
        if (s.is_glued(h)) id = std::min(id, s.opposite(h).id());
        std::string key = "E" + std::to_string(id);
        if (col.found.count(key)) return;
        col.found.emplace(std::move(key),
                          SaddleConnection{s.vertex_of_corner(from), s.vertex_of_corner(to),
                                           from, {}, vec});
      };
      direct({t, k}, {t, (k + 1) % 3}, u1);
      direct({t, (k + 2) % 3}, {t, (k + 2) % 3}, u2);
      // Everything further is seen through the opposite edge.
      std::vector<HalfEdgeRef> word;
      col.recurse(from, apex, u1, u2, {t, (k + 1) % 3}, Transition{}, word);
    }
  }
  std::vector<SaddleConnection> out;
  for (auto& [key, sc] : col.found) out.push_back(std::move(sc));
  // Deterministic order: by word length, then by from-corner and word ids.
  std::sort(out.begin(), out.end(), [](const SaddleConnection& a, const SaddleConnection& b) {
    if (a.crossings.size() != b.crossings.size()) return a.crossings.size() < b.crossings.size();
    if (a.from_corner != b.from_corner) return a.from_corner < b.from_corner;
    return std::lexicographical_compare(a.crossings.begin(), a.crossings.end(),
                                        b.crossings.begin(), b.crossings.end());
  });
  return out;
}

// ---- straighten -----------------------------------------------------------

namespace {
double triarea(cpx a, cpx b, cpx c) { return cross(b - a, c - a); }
}  // namespace

std::vector<cpx> straighten(const Surface& s, CornerRef from,
                            std::span<const HalfEdgeRef> crossings, CornerRef to) {
  if (crossings.empty()) fail(ErrorKind::InvalidStrip, "empty crossing word");
  if (from.tri != crossings.front().tri)
    fail(ErrorKind::InvalidStrip, "start corner not on the first triangle");
  DevelopedChain chain = develop_strip(s, from.tri, crossings);
  if (to.tri != chain.placements.back().tri)
    fail(ErrorKind::InvalidStrip, "end corner not on the last triangle");

  // Portals (left, right) relative to the walking direction: for ccw triangles
  // the interior lies left of edge k (tail->head), so crossing it outward puts
  // the head on the left.
  std::vector<cpx> L, R;
  for (size_t i = 0; i < chain.crossings.size(); ++i) {
    HalfEdgeRef h = chain.crossings[i];
    const Triangle& t = s.triangle(h.tri);
    L.push_back(chain.placements[i].place(t[(h.edge + 1) % 3]));
    R.push_back(chain.placements[i].place(t[h.edge]));
  }
  cpx start = chain.placements.front().place(s.triangle(from.tri)[from.edge]);
  cpx goal = chain.placements.back().place(s.triangle(to.tri)[to.edge]);
  L.push_back(goal);
  R.push_back(goal);

  // Funnel (simple stupid funnel algorithm).
  std::vector<cpx> path{start};
  cpx apex = start, pl = start, pr = start;
  size_t ai = 0, li = 0, ri = 0;
  for (size_t i = 0; i < L.size(); ++i) {
    cpx l = L[i], r = R[i];
    if (triarea(apex, pr, r) >= 0.0) {
      if (std::abs(apex - pr) < 1e-300 || triarea(apex, pl, r) < 0.0) {
        pr = r;
        ri = i;
      } else {
        if (std::abs(pl - path.back()) > 0) path.push_back(pl);
        apex = pl;
        ai = li;
        pl = pr = apex;
        li = ri = ai;
        i = ai;
        continue;
      }
    }
    if (triarea(apex, pl, l) <= 0.0) {
      if (std::abs(apex - pl) < 1e-300 || triarea(apex, pr, l) > 0.0) {
        pl = l;
        li = i;
      } else {
        if (std::abs(pr - path.back()) > 0) path.push_back(pr);
        apex = pr;
        ai = ri;
        pl = pr = apex;
        li = ri = ai;
        i = ai;
        continue;
      }
    }
  }
  if (std::abs(path.back() - goal) > 0) path.push_back(goal);
  return path;
}

// ---- cylinders --------------------------------------------------------------

namespace {

struct WordEnumerator {
  const Surface& s;
  int max_period;
  std::set<std::vector<int>> seen;           // canonical rotations
  std::vector<std::vector<HalfEdgeRef>> out;

  static std::vector<int> min_rotation(const std::vector<int>& v) {
    std::vector<int> best = v;
    std::vector<int> cur = v;
    for (size_t i = 1; i < v.size(); ++i) {
      std::rotate(cur.begin(), cur.begin() + 1, cur.end());
      if (cur < best) best = cur;
    }
    return best;
  }

  static bool primitive(const std::vector<int>& v) {
    int n = static_cast<int>(v.size());
    for (int p = 1; p < n; ++p) {
      if (n % p != 0) continue;
      bool rep = true;
      for (int i = p; i < n && rep; ++i) rep = v[i] == v[i - p];
      if (rep) return false;
    }
    return true;
  }

  void dfs(std::vector<HalfEdgeRef>& word, int start_tri) {
    HalfEdgeRef last = word.back();
    HalfEdgeRef o = s.opposite(last);
    if (o.tri == start_tri && word.size() >= 2) {
      if (o != word.front()) try_word(word);
    }
    if (static_cast<int>(word.size()) >= max_period) return;
    for (int j = 1; j <= 2; ++j) {
      HalfEdgeRef nxt{o.tri, (o.edge + j) % 3};
      if (!s.is_glued(nxt)) continue;
      word.push_back(nxt);
      dfs(word, start_tri);
      word.pop_back();
    }
  }

  void try_word(const std::vector<HalfEdgeRef>& word) {
    std::vector<int> ids;
    for (HalfEdgeRef h : word) ids.push_back(h.id());
    if (!primitive(ids)) return;
    std::vector<int> canon = min_rotation(ids);
    if (!seen.insert(canon).second) return;
    out.push_back(word);
  }

  void run() {
    for (int t = 0; t < s.num_triangles(); ++t)
      for (int e = 0; e < 3; ++e) {
        HalfEdgeRef h{t, e};
        if (!s.is_glued(h)) continue;
        std::vector<HalfEdgeRef> word{h};
        dfs(word, t);
      }
  }
};

struct FloodState {
  int tri;
  Transition place;  // chart -> cylinder plane (canonical deck representative)
  double lift_ref;   // lift of the placed centroid
};

cpx centroid(const Triangle& t) { return (t[0] + t[1] + t[2]) / 3.0; }

}  // namespace

std::vector<CylinderRecord> detect_cylinders(const Surface& s, int max_period) {
  WordEnumerator en{s, max_period, {}, {}};
  en.run();

  std::vector<CylinderRecord> records;
  std::set<std::string> dedup;

  for (const auto& word : en.out) {
    // Return transition of one period, chart of the first triangle.
    DevelopedChain chain = develop_strip(s, word.front().tri, word);
    Transition ret = chain.cumulative;
    cpx a = ret.a;
    bool flat = std::abs(a - cpx(1.0)) <= 1e-9 && std::abs(ret.b) > 1e-12;
    bool hyper = !flat && std::abs(a.imag()) <= 1e-9 * std::abs(a) && a.real() > 0.0 &&
                 std::abs(a.real() - 1.0) > 1e-9;
    if (!flat && !hyper) continue;

    CylinderRecord rec;
    rec.word = word;
    if (hyper) {
      rec.kind = CylinderKind::Hyperbolic;
      // Report the expanding orientation of the core (reversing the word
      // inverts the return map; both describe the same cylinder).
      rec.a = std::max(a.real(), 1.0 / a.real());
      rec.modulus = rec.a;
      rec.fixed_point = ret.fixed_point();
    } else {
      rec.kind = CylinderKind::Flat;
      rec.a = 1.0;
      rec.modulus = 1.0;
      rec.core_dir = ret.b / std::abs(ret.b);
    }
    cpx p = rec.fixed_point;
    cpx dir = rec.core_dir;
    auto lift_of = [&](cpx z, double ref) {
      if (rec.kind == CylinderKind::Hyperbolic) return lift_near(z - p, ref);
      return (std::conj(dir) * z).imag();
    };

    // Feasibility: the open interval of core lifts crossing every portal of
    // one period strictly.
    double flo = -1e300, fhi = 1e300;
    double ref = 0.0;
    bool first = true;
    bool feasible = true;
    for (size_t i = 0; i < chain.crossings.size() && feasible; ++i) {
      HalfEdgeRef h = chain.crossings[i];
      const Triangle& t = s.triangle(h.tri);
      cpx q0 = chain.placements[i].place(t[h.edge]);
      cpx q1 = chain.placements[i].place(t[(h.edge + 1) % 3]);
      if (rec.kind == CylinderKind::Hyperbolic &&
          (std::abs(q0 - p) < 1e-12 || std::abs(q1 - p) < 1e-12)) {
        feasible = false;
        break;
      }
      double l0, l1;
      if (first) {
        l0 = lift_of(q0, 0.0);
        l1 = lift_of(q1, l0);
        ref = 0.5 * (l0 + l1);
        first = false;
      } else {
        l0 = lift_of(q0, ref);
        l1 = lift_of(q1, ref);
      }
      flo = std::max(flo, std::min(l0, l1));
      fhi = std::min(fhi, std::max(l0, l1));
      ref = 0.5 * (flo + fhi);
      if (!(fhi - flo > 1e-12)) feasible = false;
    }
    if (!feasible) continue;
    double core = 0.5 * (flo + fhi);
    rec.core_lift = core;

    // Flood development of the band around the core, clipping at true
    // singularities; aux vertices inside the band are recorded, not clipping.
    const double kMaxBand = 8 * 2 * kPi;
    const int kMaxStates = 20000;
    double lo = core - kMaxBand, hi = core + kMaxBand;
    bool bounded = true;

    double deck_log = rec.kind == CylinderKind::Hyperbolic ? std::log(rec.a) : 0.0;
    auto canonical = [&](Transition pl, cpx anchor) {
      if (rec.kind != CylinderKind::Hyperbolic) return pl;
      double r = std::log(std::abs(anchor - p));
      double k = std::floor(r / deck_log);
      // Compose with deck^{-k}: z -> p + a^{-k} (z - p).
      double f = std::exp(-k * deck_log);
      return Transition{cpx(f, 0.0), p - f * p}.compose(pl);
    };
    auto state_key = [&](int tri, const Transition& pl, double lift) {
      auto q = [](double x) { return std::llround(x * 1e6); };
      std::string k = std::to_string(tri);
      for (double x : {pl.a.real(), pl.a.imag(), pl.b.real(), pl.b.imag(), lift / (2 * kPi)})
        k += "," + std::to_string(q(x));
      return k;
    };

    std::deque<FloodState> queue;
    std::set<std::string> visited;
    std::vector<FloodState> states;
    auto push_state = [&](int tri, Transition pl, double ref_lift) {
      cpx c = pl(centroid(s.triangle(tri)));
      if (rec.kind == CylinderKind::Hyperbolic && std::abs(c - p) < 1e-12) return;
      Transition cn = canonical(pl, c);
      double lift = lift_of(cn(centroid(s.triangle(tri))), ref_lift);
      std::string key = state_key(tri, cn, lift);
      if (!visited.insert(key).second) return;
      queue.push_back({tri, cn, lift});
    };
    for (size_t i = 0; i < chain.placements.size(); ++i)
      push_state(chain.placements[i].tri, chain.placements[i].place, core);

    struct VertexMark {
      int vertex;
      double lift;
    };
    std::vector<VertexMark> marks;
    while (!queue.empty()) {
      if (static_cast<int>(states.size()) > kMaxStates) {
        bounded = false;
        break;
      }
      FloodState st = queue.front();
      queue.pop_front();
      const Triangle& t = s.triangle(st.tri);
      double tri_lift[3];
      bool contains_center = false;
      if (rec.kind == CylinderKind::Hyperbolic) {
        // Skip triangles reaching the cone point: their lifts are ambiguous.
        cpx q[3];
        for (int k = 0; k < 3; ++k) q[k] = st.place(t[k]);
        double inside = 1.0;
        for (int k = 0; k < 3; ++k) inside = std::min(inside, cross(q[(k + 1) % 3] - q[k], p - q[k]));
        if (inside > 0) contains_center = true;
      }
      if (contains_center) {
        bounded = false;
        continue;
      }
      for (int k = 0; k < 3; ++k) tri_lift[k] = lift_of(st.place(t[k]), st.lift_ref);
      double tlo = std::min({tri_lift[0], tri_lift[1], tri_lift[2]});
      double thi = std::max({tri_lift[0], tri_lift[1], tri_lift[2]});
      if (thi <= lo || tlo >= hi) continue;  // outside the current band
      states.push_back(st);
      for (int k = 0; k < 3; ++k) {
        int v = s.vertex_of_corner({st.tri, k});
        double l = tri_lift[k];
        marks.push_back({v, l});
        if (!s.is_aux_vertex(v) && l > lo && l < hi) {
          if (l <= core)
            lo = l;
          else
            hi = l;
        }
      }
      for (int k = 0; k < 3; ++k) {
        HalfEdgeRef h{st.tri, k};
        if (!s.is_glued(h)) continue;
        double elo = std::min(tri_lift[k], tri_lift[(k + 1) % 3]);
        double ehi = std::max(tri_lift[k], tri_lift[(k + 1) % 3]);
        if (ehi <= lo || elo >= hi) continue;
        HalfEdgeRef o = s.opposite(h);
        push_state(o.tri, st.place.compose(s.transition_of(o)), st.lift_ref);
      }
    }
    if (lo <= core - kMaxBand + 1e-9 || hi >= core + kMaxBand - 1e-9) bounded = false;

    rec.lo = lo;
    rec.hi = hi;
    rec.beta = hi - lo;
    rec.bounded_by_vertices = bounded;
    if (!(rec.beta > 1e-9)) continue;

    std::set<int> interior_aux, boundary_vs;
    for (const VertexMark& m : marks) {
      if (m.lift > lo + 1e-9 && m.lift < hi - 1e-9) {
        if (s.is_aux_vertex(m.vertex)) interior_aux.insert(m.vertex);
      } else if (std::abs(m.lift - lo) <= 1e-9 || std::abs(m.lift - hi) <= 1e-9) {
        if (!s.is_aux_vertex(m.vertex)) boundary_vs.insert(m.vertex);
      }
    }
    rec.interior_aux.assign(interior_aux.begin(), interior_aux.end());
    rec.boundary_vertices.assign(boundary_vs.begin(), boundary_vs.end());
    for (const FloodState& st : states) {
      double tlo = 1e300, thi = -1e300;
      const Triangle& t = s.triangle(st.tri);
      for (int k = 0; k < 3; ++k) {
        double l = lift_of(st.place(t[k]), st.lift_ref);
        tlo = std::min(tlo, l);
        thi = std::max(thi, l);
      }
      if (thi > lo && tlo < hi) rec.cover.push_back({st.tri, st.place, st.lift_ref});
    }

    // Deduplicate maximal cylinders: same kind, same band, same covered set.
    std::set<int> tris;
    for (const auto& c : rec.cover) tris.insert(c.tri);
    std::string key = rec.kind == CylinderKind::Flat ? "F" : "H";
    key += ":" + std::to_string(std::llround(rec.beta * 1e6));
    key += ":" + std::to_string(std::llround(rec.modulus * 1e6));
    for (int t : tris) key += "," + std::to_string(t);
    if (!dedup.insert(key).second) continue;
    records.push_back(std::move(rec));
  }

  // Deterministic order: hyperbolic first, then by descending beta, then word.
  std::sort(records.begin(), records.end(), [](const CylinderRecord& x, const CylinderRecord& y) {
    if (x.kind != y.kind) return x.kind == CylinderKind::Hyperbolic;
    if (std::abs(x.beta - y.beta) > 1e-12) return x.beta > y.beta;
    std::vector<int> ix, iy;
    for (auto h : x.word) ix.push_back(h.id());
    for (auto h : y.word) iy.push_back(h.id());
    return ix < iy;
  });
  return records;
}

VerdictReport triangulability_verdict(const Surface& s, int max_period) {
  std::vector<CylinderRecord> recs = detect_cylinders(s, max_period);
  VerdictReport rep{Verdict::TriangulableWitnessed, max_period, std::nullopt};
  for (const CylinderRecord& r : recs) {
    if (r.kind != CylinderKind::Hyperbolic) continue;
    if (r.beta >= kPi - 1e-9) {
      rep.verdict = Verdict::NotTriangulableAtSingularities;
      rep.cause = r;
      return rep;
    }
  }
  rep.verdict = s.has_aux() ? Verdict::TriangulableLikely : Verdict::TriangulableWitnessed;
  return rep;
}

std::vector<DisjointnessViolation> cylinder_disjointness_check(
    const Surface& s, const std::vector<CylinderRecord>& records) {
  std::vector<DisjointnessViolation> out;

  auto lift_in = [&](const CylinderRecord& r, const CylinderCoverTri& c, cpx chart_pt,
                     double& lift) {
    cpx q = c.place(chart_pt);
    if (r.kind == CylinderKind::Hyperbolic) {
      if (std::abs(q - r.fixed_point) < 1e-12) return false;
      lift = lift_near(q - r.fixed_point, c.lift_ref);
    } else {
      lift = (std::conj(r.core_dir) * q).imag();
    }
    return true;
  };
  auto inside = [&](const CylinderRecord& r, int tri, cpx chart_pt) {
    for (const CylinderCoverTri& c : r.cover) {
      if (c.tri != tri) continue;
      double lift;
      if (!lift_in(r, c, chart_pt, lift)) continue;
      if (lift > r.lo + 1e-9 && lift < r.hi - 1e-9) return true;
    }
    return false;
  };

  for (size_t i = 0; i < records.size(); ++i) {
    if (records[i].kind != CylinderKind::Hyperbolic || records[i].beta < kPi / 2) continue;
    for (size_t j = 0; j < records.size(); ++j) {
      if (j == i) continue;
      if (records[j].kind != CylinderKind::Hyperbolic || records[j].beta < kPi / 2) continue;
      // Sample interior points of record i (uniform barycentric grids over its
      // cover, kept when strictly inside the band) against record j.
      for (const CylinderCoverTri& c : records[i].cover) {
        const Triangle& t = s.triangle(c.tri);
        const int g = 32;
        for (int u = 1; u < g && out.size() < 64; ++u)
          for (int v = 1; u + v < g; ++v) {
            double bu = static_cast<double>(u) / g, bv = static_cast<double>(v) / g;
            cpx chart_pt = t[0] * (1.0 - bu - bv) + t[1] * bu + t[2] * bv;
            double lift;
            if (!lift_in(records[i], c, chart_pt, lift)) continue;
            if (!(lift > records[i].lo + 1e-9 && lift < records[i].hi - 1e-9)) continue;
            if (inside(records[j], c.tri, chart_pt))
              out.push_back({i, j, c.place(chart_pt)});
          }
      }
    }
  }
  return out;
}

}  // namespace baf
