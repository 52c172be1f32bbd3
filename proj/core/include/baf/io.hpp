#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "baf/flip_graph.hpp"
#include "baf/geodesics.hpp"
#include "baf/surface.hpp"

namespace baf {

/// Line-oriented surface description:
///   surface <name>
///   triangle <id> <x0> <y0> <x1> <y1> <x2> <y2>
///   glue <t>:<e> <t>:<e>
///   aux <t>:<corner>
/// with '#' comments. Numbers are full-precision decimals; edge and corner
/// indices are in {0,1,2}. parse(serialize(s)) reproduces s exactly.
struct ParsedSurface {
  std::string name;
  Surface surface;
};

ParsedSurface parse_surface(std::string_view text);
std::string serialize_surface(const Surface& s, std::string_view name);

struct RenderOptions {
  double scale = 100.0;              // chart units -> SVG user units
  bool label_vertices = true;        // annotate each vertex with (theta, lambda)
  const std::vector<CylinderRecord>* shade_cylinders = nullptr;
};

/// Deterministic SVG of a spanning-tree development of the complex: every
/// triangle placed once by a BFS from triangle 0, cylinders shaded on request.
std::string render_development_svg(const Surface& s, const RenderOptions& opt = {});

/// Graphviz DOT of an exploration report: one node per triangulation (labeled
/// with its min angle), one undirected edge per flip adjacency.
std::string flip_graph_dot(const FlipGraphReport& report);

/// Named example families with ordered, defaultable parameters; used by the
/// CLI `build` verb and by parameter sweeps.
struct FamilySpec {
  std::vector<std::string> param_names;
  std::vector<double> defaults;
};

const std::map<std::string, FamilySpec>& family_registry();
Surface build_family(const std::string& family, const std::vector<double>& params);

/// Sweeps a family over the cartesian product of per-parameter value lists
/// ("theta=0.9,1.2;lambda=1.1,2,10": unlisted parameters keep their defaults)
/// and reports min_angle, alpha_hat (fixed budget), the largest hyperbolic
/// cylinder angle, and Gauss-Bonnet residuals per row as RFC-4180 CSV.
/// Parameter errors are reported in the row's status column, not thrown.
std::string sweep_family(const std::string& family, const std::string& grid,
                         int alpha_budget = 200, int cylinder_period = 8);

}  // namespace baf
