#include "baf/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>

#include "baf/builders.hpp"

namespace baf {

namespace {

[[noreturn]] void syntax(int line, const std::string& what) {
  fail(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> toks;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) toks.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

double parse_num(const std::string& tok, int line) {
  double v{};
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) syntax(line, "bad number '" + tok + "'");
  return v;
}

int parse_int(const std::string& tok, int line) {
  int v{};
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    syntax(line, "bad integer '" + tok + "'");
  return v;
}

std::pair<int, int> parse_ref(const std::string& tok, int line) {
  size_t c = tok.find(':');
  if (c == std::string::npos) syntax(line, "expected <t>:<e>, got '" + tok + "'");
  int t = parse_int(tok.substr(0, c), line);
  int e = parse_int(tok.substr(c + 1), line);
  if (e < 0 || e > 2) syntax(line, "edge/corner index out of range in '" + tok + "'");
  return {t, e};
}

void num17(std::string& out, double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

void num6(std::string& out, double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  out += buf;
}

}  // namespace

ParsedSurface parse_surface(std::string_view text) {
  std::string name = "unnamed";
  std::map<int, Triangle> tris;
  std::vector<std::pair<HalfEdgeRef, HalfEdgeRef>> gluings;
  std::vector<CornerRef> aux;

  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                                          : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (size_t h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& verb = toks[0];
    if (verb == "surface") {
      if (toks.size() != 2) syntax(lineno, "surface takes one name");
      name = toks[1];
    } else if (verb == "triangle") {
      if (toks.size() != 8) syntax(lineno, "triangle takes an id and six coordinates");
      int id = parse_int(toks[1], lineno);
      if (id < 0) syntax(lineno, "negative triangle id");
      if (tris.count(id)) syntax(lineno, "duplicate triangle id " + std::to_string(id));
      Triangle t;
      for (int k = 0; k < 3; ++k)
        t.p[k] = cpx(parse_num(toks[2 + 2 * k], lineno), parse_num(toks[3 + 2 * k], lineno));
      tris.emplace(id, t);
    } else if (verb == "glue") {
      if (toks.size() != 3) syntax(lineno, "glue takes two <t>:<e> references");
      auto [t1, e1] = parse_ref(toks[1], lineno);
      auto [t2, e2] = parse_ref(toks[2], lineno);
      gluings.push_back({{t1, e1}, {t2, e2}});
    } else if (verb == "aux") {
      if (toks.size() != 2) syntax(lineno, "aux takes one <t>:<corner> reference");
      auto [t, c] = parse_ref(toks[1], lineno);
      aux.push_back({t, c});
    } else {
      syntax(lineno, "unknown directive '" + verb + "'");
    }
  }

  int nf = static_cast<int>(tris.size());
  std::vector<Triangle> list;
  for (int i = 0; i < nf; ++i) {
    auto it = tris.find(i);
    if (it == tris.end())
      fail(ErrorKind::SyntaxError, "triangle ids are not contiguous from 0");
    list.push_back(it->second);
  }
  for (const auto& [a, b] : gluings)
    if (a.tri < 0 || a.tri >= nf || b.tri < 0 || b.tri >= nf)
      fail(ErrorKind::SyntaxError, "glue references a missing triangle");
  for (const CornerRef& c : aux)
    if (c.tri < 0 || c.tri >= nf) fail(ErrorKind::SyntaxError, "aux references a missing triangle");
  return {name, Surface::build(list, gluings, aux)};
}

std::string serialize_surface(const Surface& s, std::string_view name) {
  std::string out = "surface ";
  out += name;
  out += '\n';
  for (int t = 0; t < s.num_triangles(); ++t) {
    const Triangle& tri = s.triangle(t);
    out += "triangle " + std::to_string(t);
    for (int k = 0; k < 3; ++k) {
      out += ' ';
      num17(out, tri[k].real());
      out += ' ';
      num17(out, tri[k].imag());
    }
    out += '\n';
  }
  for (int t = 0; t < s.num_triangles(); ++t)
    for (int e = 0; e < 3; ++e) {
      HalfEdgeRef h{t, e};
      if (!s.is_glued(h)) continue;
      HalfEdgeRef o = s.opposite(h);
      if (o.id() < h.id()) continue;  // emit each gluing once
      out += "glue " + std::to_string(t) + ":" + std::to_string(e) + " " +
             std::to_string(o.tri) + ":" + std::to_string(o.edge) + '\n';
    }
  for (int t = 0; t < s.num_triangles(); ++t)
    for (int k = 0; k < 3; ++k)
      if (s.is_aux_vertex(s.vertex_of_corner({t, k}))) {
        // Emit one reference per aux vertex: its smallest corner.
        bool first = true;
        for (const CornerRef& c : s.corners_of_vertex(s.vertex_of_corner({t, k})))
          if (c < CornerRef{t, k}) first = false;
        if (first) out += "aux " + std::to_string(t) + ":" + std::to_string(k) + '\n';
      }
  return out;
}

std::string render_development_svg(const Surface& s, const RenderOptions& opt) {
  // Spanning-tree development: BFS from triangle 0 in deterministic order.
  int nf = s.num_triangles();
  std::vector<Transition> place(nf);
  std::vector<bool> placed(nf, false);
  std::vector<int> order;
  for (int root = 0; root < nf; ++root) {
    if (placed[root]) continue;
    placed[root] = true;
    order.push_back(root);
    for (size_t qi = order.size() - 1; qi < order.size(); ++qi) {
      int t = order[qi];
      for (int e = 0; e < 3; ++e) {
        HalfEdgeRef h{t, e};
        if (!s.is_glued(h)) continue;
        HalfEdgeRef o = s.opposite(h);
        if (placed[o.tri]) continue;
        placed[o.tri] = true;
        place[o.tri] = place[t].compose(s.transition_of(o));
        order.push_back(o.tri);
      }
    }
  }

  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  auto see = [&](cpx q) {
    xmin = std::min(xmin, q.real());
    xmax = std::max(xmax, q.real());
    ymin = std::min(ymin, q.imag());
    ymax = std::max(ymax, q.imag());
  };
  for (int t = 0; t < nf; ++t)
    for (int k = 0; k < 3; ++k) see(place[t](s.triangle(t)[k]));
  double sc = opt.scale;
  double pad = 20.0;
  auto X = [&](cpx q) { return (q.real() - xmin) * sc + pad; };
  auto Y = [&](cpx q) { return (ymax - q.imag()) * sc + pad; };  // y up -> SVG y down

  std::string svg;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.6f\" height=\"%.6f\">\n",
                (xmax - xmin) * sc + 2 * pad, (ymax - ymin) * sc + 2 * pad);
  svg += buf;
  std::set<int> shaded;
  if (opt.shade_cylinders)
    for (const CylinderRecord& r : *opt.shade_cylinders)
      for (const CylinderCoverTri& c : r.cover) shaded.insert(c.tri);
  for (int t = 0; t < nf; ++t) {
    svg += "<polygon points=\"";
    for (int k = 0; k < 3; ++k) {
      cpx q = place[t](s.triangle(t)[k]);
      if (k) svg += ' ';
      num6(svg, X(q));
      svg += ',';
      num6(svg, Y(q));
    }
    svg += "\" fill=\"";
    svg += shaded.count(t) ? "#9ecae1" : "#f7f7f7";
    svg += "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  }
  if (opt.label_vertices) {
    for (const ConeSummary& c : s.cone_summaries()) {
      // Label at the centroid of the vertex's placed corner positions.
      cpx acc = 0;
      int n = 0;
      for (const CornerRef& cr : s.corners_of_vertex(c.vertex)) {
        acc += place[cr.tri](s.triangle(cr.tri)[cr.edge]);
        ++n;
      }
      acc /= static_cast<double>(n);
      svg += "<text x=\"";
      num6(svg, X(acc));
      svg += "\" y=\"";
      num6(svg, Y(acc));
      svg += "\" font-size=\"10\">v" + std::to_string(c.vertex) + " (";
      num6(svg, c.angle);
      svg += ", ";
      num6(svg, c.dilation);
      svg += ")";
      svg += c.is_aux ? " aux" : "";
      svg += "</text>\n";
    }
  }
  svg += "</svg>\n";
  return svg;
}

std::string flip_graph_dot(const FlipGraphReport& report) {
  std::string out = "graph flips {\n";
  for (size_t i = 0; i < report.nodes.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"";
    num6(out, report.nodes[i].min_angle);
    out += "\"";
    if (static_cast<int>(i) == report.alpha_witness) out += " penwidth=2";
    out += "];\n";
  }
  for (const auto& [a, b] : report.edges)
    out += "  n" + std::to_string(a) + " -- n" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

const std::map<std::string, FamilySpec>& family_registry() {
  static const std::map<std::string, FamilySpec> reg = {
      {"square_torus", {{}, {}}},
      {"hex_torus", {{}, {}}},
      {"dilation_torus", {{"theta", "lambda"}, {std::numbers::pi / 3, 2.0}}},
      {"star_sphere",
       {{"theta1", "theta2", "theta3", "ratio1", "ratio2", "ratio3", "shape_re", "shape_im"},
        {std::numbers::pi / 2, std::numbers::pi / 2, std::numbers::pi / 2, 0.5, 0.5, 0.5, 0.5,
         0.8}}},
      {"big_cylinder", {{"theta", "lambda", "sectors"}, {1.2 * std::numbers::pi, 2.0, 3.0}}},
      {"two_cylinder", {{"theta", "lambda"}, {0.6 * std::numbers::pi, 2.0}}},
  };
  return reg;
}

Surface build_family(const std::string& family, const std::vector<double>& params) {
  auto it = family_registry().find(family);
  if (it == family_registry().end()) fail(ErrorKind::BadParams, "unknown family '" + family + "'");
  std::vector<double> p = it->second.defaults;
  if (params.size() > p.size())
    fail(ErrorKind::BadParams, "too many parameters for '" + family + "'");
  std::copy(params.begin(), params.end(), p.begin());
  if (family == "square_torus") return build_square_torus();
  if (family == "hex_torus") return build_hex_torus();
  if (family == "dilation_torus") return build_dilation_torus(p[0], p[1]);
  if (family == "star_sphere")
    return build_star_sphere({p[0], p[1], p[2]}, {p[3], p[4], p[5]}, cpx(p[6], p[7]));
  if (family == "big_cylinder") {
    if (p[2] != std::floor(p[2])) fail(ErrorKind::BadParams, "sectors must be an integer");
    return build_big_cylinder(p[0], p[1], static_cast<int>(p[2]));
  }
  return build_two_cylinder_fixture(p[0], p[1]);
}

namespace {

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string q = "\"";
  for (char c : v) {
    q += c;
    if (c == '"') q += '"';
  }
  return q + "\"";
}

}  // namespace

std::string sweep_family(const std::string& family, const std::string& grid, int alpha_budget,
                         int cylinder_period) {
  auto it = family_registry().find(family);
  if (it == family_registry().end()) fail(ErrorKind::BadParams, "unknown family '" + family + "'");
  const FamilySpec& spec = it->second;

  // Parse "name=v1,v2;name=v3" into per-parameter value lists.
  std::vector<std::vector<double>> values;
  for (size_t i = 0; i < spec.param_names.size(); ++i) values.push_back({spec.defaults[i]});
  size_t pos = 0;
  while (pos < grid.size()) {
    size_t semi = grid.find(';', pos);
    std::string part = grid.substr(pos, semi == std::string::npos ? grid.size() - pos : semi - pos);
    pos = semi == std::string::npos ? grid.size() : semi + 1;
    if (part.empty()) continue;
    size_t eq = part.find('=');
    if (eq == std::string::npos) fail(ErrorKind::BadParams, "grid entry lacks '=': " + part);
    std::string pname = part.substr(0, eq);
    auto pit = std::find(spec.param_names.begin(), spec.param_names.end(), pname);
    if (pit == spec.param_names.end())
      fail(ErrorKind::BadParams, "unknown parameter '" + pname + "' for family " + family);
    std::vector<double> vs;
    std::stringstream ss(part.substr(eq + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        vs.push_back(std::stod(tok));
      } catch (...) {
        fail(ErrorKind::BadParams, "bad grid value '" + tok + "'");
      }
    }
    if (vs.empty()) fail(ErrorKind::BadParams, "empty value list for '" + pname + "'");
    values[pit - spec.param_names.begin()] = vs;
  }

  std::string csv;
  for (const std::string& n : spec.param_names) csv += csv_field(n) + ",";
  csv += "min_angle,alpha_hat,max_hyperbolic_beta,r_angle,r_log,status\r\n";

  // Cartesian product in row-major order (last parameter fastest).
  std::vector<size_t> idx(values.size(), 0);
  bool done = values.empty();
  do {
    std::vector<double> p;
    for (size_t i = 0; i < values.size(); ++i) p.push_back(values[i][idx[i]]);
    std::string row;
    for (double v : p) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.12g", v);
      row += std::string(buf) + ",";
    }
    try {
      Surface s = build_family(family, p);
      AlphaResult a = alpha_lower_bound(s, alpha_budget);
      double max_beta = 0.0;
      for (const CylinderRecord& r : detect_cylinders(s, cylinder_period))
        if (r.kind == CylinderKind::Hyperbolic) max_beta = std::max(max_beta, r.beta);
      GaussBonnetReport gb = s.check_gauss_bonnet();
      char buf[200];
      std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.3g,%.3g,ok", s.min_corner_angle(),
                    a.alpha_hat, max_beta, std::abs(gb.r_angle), std::abs(gb.r_log));
      row += buf;
    } catch (const Error& e) {
      row += ",,,,," + csv_field(std::string("error: ") + e.what());
    }
    csv += row + "\r\n";
    // Advance the mixed-radix counter.
    size_t i = values.size();
    while (i > 0) {
      --i;
      if (++idx[i] < values[i].size()) break;
      idx[i] = 0;
      if (i == 0) done = true;
    }
    if (values.empty()) done = true;
  } while (!done);
  return csv;
}

}  // namespace baf
