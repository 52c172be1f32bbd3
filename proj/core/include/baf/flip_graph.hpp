#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "baf/geodesics.hpp"
#include "baf/surface.hpp"

namespace baf {

/// Relabeling-invariant state identity of a triangulation: lexicographically
/// minimal BFS encoding of the half-edge combinatorics (with aux flags),
/// concatenated with triangle shape parameters quantized to a 1e-9 grid after
/// similarity normalization.
using TriangulationKey = std::string;

TriangulationKey canonical_key(const Surface& s);

/// Minimum corner angle over all triangles (Delaunay-style quality measure).
double min_angle(const Surface& s);

struct FlipGraphNode {
  TriangulationKey key;
  Surface surface;  // representative
  double min_angle = 0.0;
  int depth = 0;                 // flip distance from the root
  int parent = -1;               // BFS parent node index (-1 at the root)
  HalfEdgeRef parent_edge;       // edge flipped in the parent to reach this node
};

struct FlipGraphReport {
  std::vector<FlipGraphNode> nodes;        // discovery order (deterministic)
  std::vector<std::pair<int, int>> edges;  // node index pairs, a < b, sorted
  bool frontier_exhausted = false;
  bool heuristic = false;  // true when a pruning floor dropped states
  double alpha_hat = 0.0;
  int alpha_witness = -1;  // node attaining alpha_hat
  bool alpha_exact = false;

  int find(const TriangulationKey& k) const;  // node index or -1
};

struct ExploreOptions {
  int budget = 1000;  // node limit; must be >= 1
  int depth = std::numeric_limits<int>::max();
  double prune_floor = -1.0;  // drop children with min_angle below this (heuristic)
  bool parallel = false;      // expand BFS layers concurrently (same output)
};

FlipGraphReport explore_flip_graph(const Surface& s, const ExploreOptions& opt);

inline FlipGraphReport explore_flip_graph(const Surface& s, int budget,
                                          int depth = std::numeric_limits<int>::max()) {
  return explore_flip_graph(s, ExploreOptions{budget, depth, -1.0, false});
}

struct AlphaResult {
  double alpha_hat = 0.0;
  bool exact = false;
  TriangulationKey witness;
};

AlphaResult alpha_lower_bound(const Surface& s, int budget);

struct ReachabilityResult {
  bool reached = false;
  int flip_distance = -1;
  std::vector<HalfEdgeRef> chain;  // edges to flip, starting from the source
};

/// BFS from `s` toward each target's canonical key. Targets must carry the
/// same cone data, triangle count and genus; never proves unreachability.
std::vector<ReachabilityResult> verify_reachability(const Surface& s,
                                                    const std::vector<Surface>& targets,
                                                    int budget);

struct AlphaCylinderViolation {
  size_t record;
  double beta;
  double bound;  // pi - alpha_hat + 1e-6
};

struct AlphaCylinderReport {
  double alpha_hat = 0.0;
  int checked = 0;  // hyperbolic records without interior aux vertices
  int skipped_aux = 0;
  std::vector<AlphaCylinderViolation> violations;
};

/// Checks beta <= pi - alpha_hat + 1e-6 for every hyperbolic record that is a
/// cylinder of the marked surface (no auxiliary vertices inside its band).
AlphaCylinderReport check_alpha_cylinder_bound(double alpha_hat,
                                               const std::vector<CylinderRecord>& records);

}  // namespace baf
