// baf: command-line shell for branched affine surfaces.
#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "baf/builders.hpp"
#include "baf/flip_graph.hpp"
#include "baf/flips.hpp"
#include "baf/geodesics.hpp"
#include "baf/io.hpp"

using namespace baf;

namespace {

constexpr double kPi = std::numbers::pi;

double parse_angle(const std::string& s) {
  if (s.rfind("deg:", 0) == 0) return std::stod(s.substr(4)) * kPi / 180.0;
  return std::stod(s);
}

ParsedSurface load(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f.good()) fail(ErrorKind::SyntaxError, "cannot open '" + path + "'");
    ss << f.rdbuf();
  }
  return parse_surface(ss.str());
}

void write_out(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f.good()) fail(ErrorKind::SyntaxError, "cannot open '" + path + "' for writing");
  f << content;
}

HalfEdgeRef parse_half_edge(const std::string& tok) {
  size_t c = tok.find(':');
  if (c == std::string::npos) fail(ErrorKind::BadParams, "expected t:e, got '" + tok + "'");
  return {std::stoi(tok.substr(0, c)), std::stoi(tok.substr(c + 1))};
}

void print_info(const Surface& s, const std::string& name) {
  SurfaceInfo info = s.euler_info();
  GaussBonnetReport gb = s.check_gauss_bonnet();
  std::printf("surface %s\n", name.c_str());
  std::printf("triangles %d  edges %d  vertices %d  chi %d  genus %d  marked %d\n", info.F,
              info.E, info.V, info.chi, info.genus, info.n);
  std::printf("closed %s  boundary_components %d\n", info.closed ? "yes" : "no",
              info.boundary_components);
  std::printf("gauss-bonnet residuals: angle %.3g  log-dilation %.3g\n", std::abs(gb.r_angle),
              std::abs(gb.r_log));
  std::printf("min corner angle %.12g\n", s.min_corner_angle());
  for (const ConeSummary& c : s.cone_summaries())
    std::printf("vertex %d: angle %.12g  dilation %.12g%s%s\n", c.vertex, c.angle, c.dilation,
                c.is_aux ? "  aux" : "", c.is_boundary ? "  boundary" : "");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"branched affine surfaces: triangulations, flips, geodesics, cylinders"};
  app.require_subcommand(1);

  std::string in_file, out_file, dot_file, svg_file, csv_file;
  int edge_index = 0, budget = 1000, depth = 4, tri = 0, max_cross = 100, period = 8;
  bool parallel = false;
  std::string at_str = "0.3,0.3", dir_str = "0", word_str, from_str = "0:0", to_str = "0:0";
  std::string family, grid;
  std::vector<std::string> fam_params;
  int shade_period = 0;

  auto* validate = app.add_subcommand("validate", "parse and validate a surface file");
  validate->add_option("file", in_file)->required();

  auto* info = app.add_subcommand("info", "print surface summary");
  info->add_option("file", in_file)->required();

  auto* flipc = app.add_subcommand("flip", "flip an interior edge and print the result");
  flipc->add_option("file", in_file)->required();
  flipc->add_option("--edge", edge_index, "index into the interior edge list")->required();

  auto* alpha = app.add_subcommand("alpha", "lower bound for the minimax angle invariant");
  alpha->add_option("file", in_file)->required();
  alpha->add_option("--budget", budget);

  auto* explore = app.add_subcommand("explore", "breadth-first flip graph exploration");
  explore->add_option("file", in_file)->required();
  explore->add_option("--depth", depth);
  explore->add_option("--budget", budget);
  explore->add_option("--dot", dot_file, "write the graph as DOT");
  explore->add_flag("--parallel", parallel);

  auto* trace_c = app.add_subcommand("trace", "trace a straight trajectory");
  trace_c->add_option("file", in_file)->required();
  trace_c->add_option("--tri", tri);
  trace_c->add_option("--at", at_str, "start point X,Y in the triangle's chart");
  trace_c->add_option("--dir", dir_str, "direction angle (radians, or deg:D)");
  trace_c->add_option("--max", max_cross, "crossing budget");

  auto* saddles = app.add_subcommand("saddles", "enumerate saddle connections");
  saddles->add_option("file", in_file)->required();
  saddles->add_option("--depth", depth, "max crossings");

  auto* cyl = app.add_subcommand("cylinders", "detect affine cylinders");
  cyl->add_option("file", in_file)->required();
  cyl->add_option("--period", period, "max crossing-word period");

  auto* verdict = app.add_subcommand("verdict", "triangulability at the singularities");
  verdict->add_option("file", in_file)->required();
  verdict->add_option("--period", period);

  auto* straighten_c = app.add_subcommand("straighten", "pull an arc tight in its strip");
  straighten_c->add_option("file", in_file)->required();
  straighten_c->add_option("--word", word_str, "crossings t:e,t:e,...")->required();
  straighten_c->add_option("--from", from_str, "start corner t:c");
  straighten_c->add_option("--to", to_str, "end corner t:c");

  auto* build = app.add_subcommand("build", "emit an example family as a surface file");
  build->add_option("family", family)->required();
  build->add_option("params", fam_params, "numeric parameters (angles accept deg:)");
  build->add_option("--out", out_file);

  auto* render = app.add_subcommand("render", "SVG development");
  render->add_option("file", in_file)->required();
  render->add_option("--svg", svg_file)->required();
  render->add_option("--cylinders", shade_period, "shade cylinders found up to this period");

  auto* sweep = app.add_subcommand("sweep", "CSV parameter sweep of a family");
  sweep->add_option("--family", family)->required();
  sweep->add_option("--grid", grid, "name=v1,v2;name=v3,...");
  sweep->add_option("--csv", csv_file);
  sweep->add_option("--budget", budget);
  sweep->add_option("--period", period);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (validate->parsed()) {
      ParsedSurface ps = load(in_file);
      GaussBonnetReport gb = ps.surface.check_gauss_bonnet();
      if (std::abs(gb.r_angle) > 1e-9 || std::abs(gb.r_log) > 1e-9)
        fail(ErrorKind::BadParams, "Gauss-Bonnet residual exceeds 1e-9");
      std::printf("ok %s: %d triangles\n", ps.name.c_str(), ps.surface.num_triangles());
    } else if (info->parsed()) {
      ParsedSurface ps = load(in_file);
      print_info(ps.surface, ps.name);
    } else if (flipc->parsed()) {
      ParsedSurface ps = load(in_file);
      auto edges = ps.surface.interior_edges();
      if (edge_index < 0 || edge_index >= static_cast<int>(edges.size()))
        fail(ErrorKind::BadParams, "edge index out of range");
      FlipResult r = flip(ps.surface, edges[edge_index]);
      write_out(out_file, serialize_surface(r.surface, ps.name + "_flipped"));
    } else if (alpha->parsed()) {
      ParsedSurface ps = load(in_file);
      AlphaResult a = alpha_lower_bound(ps.surface, budget);
      std::printf("alpha_hat %.12g\nexact %s\n", a.alpha_hat, a.exact ? "true" : "false");
    } else if (explore->parsed()) {
      ParsedSurface ps = load(in_file);
      ExploreOptions opt;
      opt.budget = budget;
      opt.depth = depth;
      opt.parallel = parallel;
      FlipGraphReport rep = explore_flip_graph(ps.surface, opt);
      std::printf("nodes %zu\nedges %zu\nfrontier_exhausted %s\nalpha_hat %.12g\nalpha_exact %s\n",
                  rep.nodes.size(), rep.edges.size(), rep.frontier_exhausted ? "true" : "false",
                  rep.alpha_hat, rep.alpha_exact ? "true" : "false");
      if (!dot_file.empty()) write_out(dot_file, flip_graph_dot(rep));
    } else if (trace_c->parsed()) {
      ParsedSurface ps = load(in_file);
      double x, y;
      if (std::sscanf(at_str.c_str(), "%lf,%lf", &x, &y) != 2)
        fail(ErrorKind::BadParams, "--at expects X,Y");
      double phi = parse_angle(dir_str);
      auto events = trace(ps.surface, tri, cpx(x, y), std::polar(1.0, phi), max_cross);
      for (const TrajectoryEvent& ev : events) {
        if (const auto* c = std::get_if<CrossEdge>(&ev))
          std::printf("cross %d:%d t=%.12g\n", c->edge.tri, c->edge.edge, c->t);
        else if (const auto* h = std::get_if<HitVertex>(&ev))
          std::printf("hit-vertex %d\n", h->vertex);
        else if (const auto* b = std::get_if<ExitBoundary>(&ev))
          std::printf("exit-boundary %d:%d t=%.12g\n", b->edge.tri, b->edge.edge, b->t);
        else if (const auto* l = std::get_if<LimitCycle>(&ev)) {
          std::printf("limit-cycle contraction=%.12g word=", l->contraction);
          for (size_t i = 0; i < l->word.size(); ++i)
            std::printf("%s%d:%d", i ? "," : "", l->word[i].tri, l->word[i].edge);
          std::printf("\n");
        } else {
          std::printf("budget-exhausted\n");
        }
      }
    } else if (saddles->parsed()) {
      ParsedSurface ps = load(in_file);
      auto sc = enumerate_saddle_connections(ps.surface, depth);
      for (const SaddleConnection& c : sc) {
        std::printf("v%d->v%d vec=(%.12g,%.12g) crossings=%zu word=", c.from_vertex, c.to_vertex,
                    c.vec.real(), c.vec.imag(), c.crossings.size());
        for (size_t i = 0; i < c.crossings.size(); ++i)
          std::printf("%s%d:%d", i ? "," : "", c.crossings[i].tri, c.crossings[i].edge);
        std::printf("\n");
      }
      std::printf("total %zu\n", sc.size());
    } else if (cyl->parsed()) {
      ParsedSurface ps = load(in_file);
      auto recs = detect_cylinders(ps.surface, period);
      for (const CylinderRecord& r : recs) {
        std::printf("%s a=%.12g beta=%.12g period=%zu%s",
                    r.kind == CylinderKind::Hyperbolic ? "hyperbolic" : "flat", r.a, r.beta,
                    r.word.size(), r.interior_aux.empty() ? "" : " interior-aux");
        std::printf(" word=");
        for (size_t i = 0; i < r.word.size(); ++i)
          std::printf("%s%d:%d", i ? "," : "", r.word[i].tri, r.word[i].edge);
        std::printf("\n");
      }
      std::printf("total %zu\n", recs.size());
    } else if (verdict->parsed()) {
      ParsedSurface ps = load(in_file);
      VerdictReport rep = triangulability_verdict(ps.surface, period);
      const char* v = rep.verdict == Verdict::TriangulableWitnessed ? "TRIANGULABLE_WITNESSED"
                      : rep.verdict == Verdict::TriangulableLikely
                          ? "TRIANGULABLE_LIKELY"
                          : "NOT_TRIANGULABLE_AT_SINGULARITIES";
      std::printf("%s (period %d)\n", v, rep.search_period);
      if (rep.cause)
        std::printf("cause: hyperbolic cylinder a=%.12g beta=%.12g\n", rep.cause->a,
                    rep.cause->beta);
    } else if (straighten_c->parsed()) {
      ParsedSurface ps = load(in_file);
      std::vector<HalfEdgeRef> word;
      std::stringstream ss(word_str);
      std::string tok;
      while (std::getline(ss, tok, ',')) word.push_back(parse_half_edge(tok));
      HalfEdgeRef fc = parse_half_edge(from_str), tc = parse_half_edge(to_str);
      auto path = straighten(ps.surface, {fc.tri, fc.edge}, word, {tc.tri, tc.edge});
      for (cpx p : path) std::printf("%.12g %.12g\n", p.real(), p.imag());
    } else if (build->parsed()) {
      std::vector<double> params;
      for (const std::string& p : fam_params) params.push_back(parse_angle(p));
      Surface s = build_family(family, params);
      write_out(out_file, serialize_surface(s, family));
    } else if (render->parsed()) {
      ParsedSurface ps = load(in_file);
      RenderOptions opt;
      std::vector<CylinderRecord> recs;
      if (shade_period > 0) {
        recs = detect_cylinders(ps.surface, shade_period);
        opt.shade_cylinders = &recs;
      }
      write_out(svg_file, render_development_svg(ps.surface, opt));
    } else if (sweep->parsed()) {
      write_out(csv_file, sweep_family(family, grid, budget, period));
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
