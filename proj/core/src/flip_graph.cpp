#include "baf/flip_graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <future>
#include <numbers>
#include <set>
#include <thread>

#include "baf/flips.hpp"

namespace baf {

namespace {

constexpr double kPi = std::numbers::pi;

void push_i64(std::string& out, std::int64_t v) {
  for (int i = 7; i >= 0; --i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::int64_t quantize(double x) { return std::llround(x * 1e9); }

/// Deterministic BFS encoding rooted at half-edge (t0, r0). Each triangle gets
/// a BFS label and a frame rotation; the frame of a newly discovered triangle
/// puts the entering edge first, so the encoding depends only on the root.
std::string encode_from(const Surface& s, int t0, int r0) {
  const int nf = s.num_triangles();
  std::vector<int> label(nf, -1), rot(nf, 0);
  std::vector<int> order;
  order.reserve(nf);
  auto discover = [&](int t, int r) {
    label[t] = static_cast<int>(order.size());
    rot[t] = r;
    order.push_back(t);
  };
  discover(t0, r0);

  std::string out;
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int t = order[qi];
    for (int j = 0; j < 3; ++j) {
      HalfEdgeRef h{t, (rot[t] + j) % 3};
      if (!s.is_glued(h)) {
        push_i64(out, -1);
        push_i64(out, -1);
        continue;
      }
      HalfEdgeRef o = s.opposite(h);
      if (label[o.tri] < 0) discover(o.tri, o.edge);
      push_i64(out, label[o.tri]);
      push_i64(out, (o.edge - rot[o.tri] + 3) % 3);
    }
    if (qi + 1 == order.size() && static_cast<int>(order.size()) < nf) {
      // Disconnected complex: restart at the smallest unlabeled triangle.
      for (int u = 0; u < nf; ++u)
        if (label[u] < 0) {
          discover(u, 0);
          break;
        }
    }
  }
  for (int t : order)
    for (int j = 0; j < 3; ++j)
      out.push_back(s.is_aux_vertex(s.vertex_of_corner({t, (rot[t] + j) % 3})) ? 1 : 0);
  for (int t : order) {
    const Triangle& tri = s.triangle(t);
    cpx p0 = tri[rot[t] % 3], p1 = tri[(rot[t] + 1) % 3], p2 = tri[(rot[t] + 2) % 3];
    cpx w = (p2 - p0) / (p1 - p0);  // similarity-normalized shape
    push_i64(out, quantize(w.real()));
    push_i64(out, quantize(w.imag()));
  }
  return out;
}

}  // namespace

TriangulationKey canonical_key(const Surface& s) {
  std::string best;
  for (int t = 0; t < s.num_triangles(); ++t)
    for (int r = 0; r < 3; ++r) {
      std::string e = encode_from(s, t, r);
      if (best.empty() || e < best) best = std::move(e);
    }
  return best;
}

double min_angle(const Surface& s) { return s.min_corner_angle(); }

int FlipGraphReport::find(const TriangulationKey& k) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].key == k) return static_cast<int>(i);
  return -1;
}

namespace {

struct Child {
  int parent;
  HalfEdgeRef edge;
  Surface surface;
  TriangulationKey key;
  double min_angle;
};

std::vector<Child> expand_node(const Surface& s, int parent) {
  std::vector<Child> out;
  for (HalfEdgeRef e : s.interior_edges()) {
    if (!quad_of_edge(s, e).flippable()) continue;
    FlipResult r = flip(s, e);
    TriangulationKey k = canonical_key(r.surface);
    double ma = r.surface.min_corner_angle();
    out.push_back({parent, e, std::move(r.surface), std::move(k), ma});
  }
  return out;
}

}  // namespace

FlipGraphReport explore_flip_graph(const Surface& s, const ExploreOptions& opt) {
  if (opt.budget < 1) fail(ErrorKind::BudgetZero, "node budget must be at least 1");

  FlipGraphReport rep;
  std::map<TriangulationKey, int> index;
  std::set<std::pair<int, int>> edge_set;

  rep.nodes.push_back({canonical_key(s), s, s.min_corner_angle(), 0, -1, {}});
  index.emplace(rep.nodes[0].key, 0);
  rep.frontier_exhausted = true;

  std::vector<int> frontier = {0};
  while (!frontier.empty()) {
    if (rep.nodes[frontier.front()].depth >= opt.depth) {
      // Depth cutoff: unexplored flips may remain beyond it.
      for (int idx : frontier)
        if (!expand_node(rep.nodes[idx].surface, idx).empty()) rep.frontier_exhausted = false;
      break;
    }

    std::vector<Child> children;
    if (opt.parallel && frontier.size() > 1) {
      unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                            static_cast<unsigned>(frontier.size()));
      std::vector<std::future<std::vector<std::vector<Child>>>> futs;
      size_t chunk = (frontier.size() + workers - 1) / workers;
      for (size_t lo = 0; lo < frontier.size(); lo += chunk) {
        size_t hi = std::min(frontier.size(), lo + chunk);
        futs.push_back(std::async(std::launch::async, [&, lo, hi] {
          std::vector<std::vector<Child>> part;
          for (size_t i = lo; i < hi; ++i)
            part.push_back(expand_node(rep.nodes[frontier[i]].surface, frontier[i]));
          return part;
        }));
      }
      for (auto& f : futs)
        for (auto& part : f.get())
          for (auto& c : part) children.push_back(std::move(c));
    } else {
      for (int idx : frontier)
        for (auto& c : expand_node(rep.nodes[idx].surface, idx)) children.push_back(std::move(c));
    }

    // Deterministic merge in (parent order, edge order).
    std::vector<int> next;
    for (Child& c : children) {
      if (opt.prune_floor > 0 && c.min_angle < opt.prune_floor) {
        rep.heuristic = true;
        continue;
      }
      auto it = index.find(c.key);
      if (it != index.end()) {
        auto [a, b] = std::minmax(c.parent, it->second);
        edge_set.insert({a, b});
        continue;
      }
      if (static_cast<int>(rep.nodes.size()) >= opt.budget) {
        rep.frontier_exhausted = false;
        continue;
      }
      int id = static_cast<int>(rep.nodes.size());
      rep.nodes.push_back({std::move(c.key), std::move(c.surface), c.min_angle,
                           rep.nodes[c.parent].depth + 1, c.parent, c.edge});
      index.emplace(rep.nodes.back().key, id);
      edge_set.insert({c.parent, id});
      next.push_back(id);
    }
    frontier = std::move(next);
  }

  rep.edges.assign(edge_set.begin(), edge_set.end());
  for (size_t i = 0; i < rep.nodes.size(); ++i)
    if (rep.alpha_witness < 0 || rep.nodes[i].min_angle > rep.alpha_hat + 1e-15) {
      rep.alpha_hat = rep.nodes[i].min_angle;
      rep.alpha_witness = static_cast<int>(i);
    }
  rep.alpha_exact =
      !rep.heuristic && (rep.frontier_exhausted || rep.alpha_hat >= kPi / 3 - 1e-9);
  return rep;
}

AlphaResult alpha_lower_bound(const Surface& s, int budget) {
  FlipGraphReport rep = explore_flip_graph(s, budget);
  return {rep.alpha_hat, rep.alpha_exact, rep.nodes[rep.alpha_witness].key};
}

namespace {

bool compatible(const Surface& a, const Surface& b) {
  SurfaceInfo ia = a.euler_info(), ib = b.euler_info();
  if (ia.F != ib.F || ia.V != ib.V || ia.genus != ib.genus || ia.closed != ib.closed)
    return false;
  auto cones = [](const Surface& s) {
    std::vector<std::tuple<double, double, bool>> v;
    for (const auto& c : s.cone_summaries()) v.push_back({c.angle, c.dilation, c.is_aux});
    std::sort(v.begin(), v.end());
    return v;
  };
  auto ca = cones(a), cb = cones(b);
  for (size_t i = 0; i < ca.size(); ++i) {
    if (std::abs(std::get<0>(ca[i]) - std::get<0>(cb[i])) > 1e-9) return false;
    if (std::abs(std::get<1>(ca[i]) - std::get<1>(cb[i])) > 1e-9) return false;
    if (std::get<2>(ca[i]) != std::get<2>(cb[i])) return false;
  }
  return true;
}

}  // namespace

std::vector<ReachabilityResult> verify_reachability(const Surface& s,
                                                    const std::vector<Surface>& targets,
                                                    int budget) {
  for (const Surface& t : targets)
    if (!compatible(s, t))
      fail(ErrorKind::IncompatibleTargets,
           "target does not match the source cone data / counts");

  FlipGraphReport rep = explore_flip_graph(s, budget);
  std::vector<ReachabilityResult> out;
  for (const Surface& t : targets) {
    TriangulationKey k = canonical_key(t);
    int idx = rep.find(k);
    ReachabilityResult r;
    if (idx >= 0) {
      r.reached = true;
      r.flip_distance = rep.nodes[idx].depth;
      for (int cur = idx; rep.nodes[cur].parent >= 0; cur = rep.nodes[cur].parent)
        r.chain.push_back(rep.nodes[cur].parent_edge);
      std::reverse(r.chain.begin(), r.chain.end());
    }
    out.push_back(std::move(r));
  }
  return out;
}

AlphaCylinderReport check_alpha_cylinder_bound(double alpha_hat,
                                               const std::vector<CylinderRecord>& records) {
  AlphaCylinderReport rep;
  rep.alpha_hat = alpha_hat;
  for (size_t i = 0; i < records.size(); ++i) {
    const CylinderRecord& r = records[i];
    if (r.kind != CylinderKind::Hyperbolic) continue;
    if (!r.interior_aux.empty()) {
      // Prop-4.3-style bound applies to cylinders of the marked surface only.
      ++rep.skipped_aux;
      continue;
    }
    ++rep.checked;
    double bound = kPi - alpha_hat + 1e-6;
    if (r.beta > bound) rep.violations.push_back({i, r.beta, bound});
  }
  return rep;
}

}  // namespace baf
