#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "baf/developing.hpp"
#include "baf/surface.hpp"

namespace baf {

// ---- trajectory tracing -----------------------------------------------

struct CrossEdge {
  HalfEdgeRef edge;
  double t;  // parameter along the half-edge, strictly inside (0, 1)
};
struct HitVertex {
  int vertex;
};
struct ExitBoundary {
  HalfEdgeRef edge;
  double t;
};
struct LimitCycle {
  std::vector<HalfEdgeRef> word;  // periodic crossing word, one period
  double contraction;             // min(a, 1/a) of the return map
};
struct BudgetExhausted {};

using TrajectoryEvent =
    std::variant<CrossEdge, HitVertex, ExitBoundary, LimitCycle, BudgetExhausted>;

/// Extends the straight ray from `at` (in the chart of triangle `tri`) in the
/// given direction across glued edges, emitting events in order. The final
/// event is HitVertex, ExitBoundary, LimitCycle or BudgetExhausted.
std::vector<TrajectoryEvent> trace(const Surface& s, int tri, cpx at, cpx direction,
                                   int max_crossings);

// ---- saddle connections -----------------------------------------------

struct SaddleConnection {
  int from_vertex = -1;
  int to_vertex = -1;
  CornerRef from_corner;               // corner of the starting triangle
  std::vector<HalfEdgeRef> crossings;  // edges crossed strictly internally
  cpx vec;                             // developed vector, chart of the first triangle
};

/// All saddle connections whose interior crosses at most `depth` edges,
/// deduplicated up to reversal. Strips are pruned by visibility wedges.
std::vector<SaddleConnection> enumerate_saddle_connections(const Surface& s, int depth);

/// Geodesic representative of the arc that runs through the strip of
/// `crossings` from vertex corner `from` of the first triangle to vertex
/// corner `to` of the last: the shortest polyline in the developed strip.
/// Points are in the developed chart of the first triangle; a 2-point result
/// is a single saddle connection.
std::vector<cpx> straighten(const Surface& s, CornerRef from,
                            std::span<const HalfEdgeRef> crossings, CornerRef to);

// ---- cylinders ---------------------------------------------------------

enum class CylinderKind { Flat, Hyperbolic };

/// One placed triangle of a cylinder's covering development, with the lift
/// (continuous argument for hyperbolic records, perpendicular offset for flat
/// ones) of its centroid fixing the branch.
struct CylinderCoverTri {
  int tri = -1;
  Transition place;
  double lift_ref = 0.0;
};

struct CylinderRecord {
  CylinderKind kind = CylinderKind::Flat;
  std::vector<HalfEdgeRef> word;  // one period of the cyclic crossing word
  double a = 1.0;                 // return derivative (1 for flat; real > 0 otherwise)
  double modulus = 1.0;           // max(a, 1/a)
  double beta = 0.0;              // angle (hyperbolic) or band width (flat)
  cpx fixed_point;                // hyperbolic only: fixed point of the return map
  cpx core_dir{1.0, 0.0};         // flat only: unit direction of the closed geodesics
  double core_lift = 0.0;         // lift of the core geodesic
  double lo = 0.0, hi = 0.0;      // open band bounds in lift coordinates (lo < core < hi)
  bool bounded_by_vertices = true;     // false when the flood search hit its own bound
  std::vector<int> interior_aux;       // aux vertices strictly inside the open band
  std::vector<int> boundary_vertices;  // true singularities on the band boundary
  std::vector<CylinderCoverTri> cover;
};

/// Detects affine cylinders from periodic crossing words of length at most
/// `max_period`. Hyperbolic angles are measured against true singularities
/// only; auxiliary vertices found strictly inside the band are listed in
/// `interior_aux` instead of clipping it.
std::vector<CylinderRecord> detect_cylinders(const Surface& s, int max_period);

enum class Verdict { TriangulableWitnessed, TriangulableLikely, NotTriangulableAtSingularities };

struct VerdictReport {
  Verdict verdict;
  int search_period;                    // bound used by detect_cylinders
  std::optional<CylinderRecord> cause;  // the wide cylinder, when not triangulable
};

VerdictReport triangulability_verdict(const Surface& s, int max_period);

struct DisjointnessViolation {
  size_t record_a, record_b;
  cpx witness;  // developed sample point of a lying inside b's band
};

/// Samples a 32x32 interior grid of every record with beta >= pi/2 and checks
/// the samples against every other such record's band.
std::vector<DisjointnessViolation> cylinder_disjointness_check(
    const Surface& s, const std::vector<CylinderRecord>& records);

}  // namespace baf
