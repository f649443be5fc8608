#include "tropica/json_io.hpp"

#include <algorithm>
#include <set>

namespace tropica::io {

namespace {

[[noreturn]] void bad(const std::string& msg) {
  throw Error(ErrorKind::Parse, msg);
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

long long_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
  long out = v.get<long>();
  if (std::abs(out) > 1000000)
    bad(std::string("field \"") + key + "\" out of range (|value| <= 10^6)");
  return out;
}

std::string str_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) bad(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

TropicalNumber trop_field(const json& j, const char* key) {
  return parse_tropical(str_field(j, key));
}

Rational rat_field(const json& j, const char* key) {
  TropicalNumber v = trop_field(j, key);
  if (v.is_bottom()) bad(std::string("field \"") + key + "\" must be finite");
  return v.finite();
}

json ij_json(const IJ& e) { return json::array({e.i, e.j}); }

IJ parse_ij(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer())
    bad("exponent pair must be [i, j]");
  return {j[0].get<int>(), j[1].get<int>()};
}

Vec2i parse_dir(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer())
    bad("direction must be [x, y]");
  Vec2i v{j[0].get<long>(), j[1].get<long>()};
  // keeps every downstream determinant and multiplicity inside 64 bits
  if (std::abs(v.x) > 1000000 || std::abs(v.y) > 1000000)
    bad("direction component out of range (|entry| <= 10^6)");
  return v;
}

json dir_json(const Vec2i& v) { return json::array({v.x, v.y}); }

const json& array_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) bad(std::string("field \"") + key + "\" must be an array");
  return v;
}

}  // namespace

json parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  if (j.is_object()) {
    auto it = j.find("schema");
    if (it != j.end() && (!it->is_string() || it->get<std::string>() != kSchema))
      bad("unsupported schema (expected \"tropica/1\")");
  }
  return j;
}

UniPoly parse_unipoly(const json& j) {
  if (!j.is_object()) bad("polynomial must be an object");
  if (j.contains("vars") && int_field(j, "vars") != 1)
    bad("expected a univariate polynomial (vars = 1)");
  std::vector<std::pair<unsigned, TropicalNumber>> terms;
  for (const json& t : array_field(j, "terms")) {
    int i = int_field(t, "i");
    if (i < 0) bad("exponent must be nonnegative");
    if (i > 10000) bad("exponent out of range (<= 10^4)");
    terms.emplace_back(static_cast<unsigned>(i), trop_field(t, "coeff"));
  }
  return UniPoly::from_terms(terms);
}

json unipoly_json(const UniPoly& p) {
  json terms = json::array();
  for (const auto& [i, c] : p.terms())
    terms.push_back({{"i", i}, {"coeff", tropical_to_string(c)}});
  return {{"schema", kSchema}, {"vars", 1}, {"terms", terms}};
}

BiPoly parse_bipoly(const json& j) {
  if (!j.is_object()) bad("polynomial must be an object");
  if (j.contains("vars") && int_field(j, "vars") != 2)
    bad("expected a bivariate polynomial (vars = 2)");
  std::vector<std::pair<IJ, TropicalNumber>> terms;
  for (const json& t : array_field(j, "terms")) {
    IJ e{int_field(t, "i"), int_field(t, "j")};
    if (e.i > 10000 || e.j > 10000) bad("exponent out of range (<= 10^4)");
    terms.emplace_back(e, trop_field(t, "coeff"));
  }
  return BiPoly::from_terms(terms);
}

json bipoly_json(const BiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"i", e.i}, {"j", e.j}, {"coeff", tropical_to_string(c)}});
  return {{"schema", kSchema}, {"vars", 2}, {"terms", terms}};
}

json rootlist_json(const RootList& roots) {
  json out = json::array();
  for (const RootEntry& r : roots)
    out.push_back({{"root", tropical_to_string(r.root)}, {"order", r.order}});
  return out;
}

RootList parse_rootlist(const json& j) {
  if (!j.is_array()) bad("root list must be an array");
  RootList out;
  for (const json& r : j) {
    int order = int_field(r, "order");
    if (order <= 0) bad("root order must be positive");
    if (order > 10000) bad("root order out of range (<= 10^4)");
    out.push_back({trop_field(r, "root"), static_cast<unsigned>(order)});
  }
  return out;
}

json factorization_json(const Factorization& f) {
  return {{"schema", kSchema},
          {"leading", tropical_to_string(f.leading)},
          {"roots", rootlist_json(f.roots)}};
}

json subdivision_json(const DualSubdivision& s) {
  json support = json::array();
  for (const IJ& p : s.support) support.push_back(ij_json(p));
  json poly = json::array();
  for (const IJ& p : s.newton_polygon) poly.push_back(ij_json(p));
  json cells = json::array();
  for (const SubCell& c : s.cells) {
    json vs = json::array();
    for (const IJ& p : c.vertices) vs.push_back(ij_json(p));
    cells.push_back({{"vertices", vs}});
  }
  json edges = json::array();
  for (const SubEdge& e : s.edges) {
    json cellrefs = json::array();
    for (int k = 0; k < e.ncells; ++k) cellrefs.push_back(e.cells[k]);
    edges.push_back({{"a", ij_json(e.a)},
                     {"b", ij_json(e.b)},
                     {"cells", cellrefs},
                     {"weight", e.weight},
                     {"boundary", e.boundary}});
  }
  json out = {{"schema", kSchema},
              {"type", "dual_subdivision"},
              {"dimension", s.dimension},
              {"support", support},
              {"newton_polygon", poly},
              {"cells", cells},
              {"edges", edges}};
  if (s.has_lift) {
    json lifts = json::array();
    for (const Rational& q : s.lifts) lifts.push_back(rational_to_string(q));
    out["lifts"] = lifts;
  }
  return out;
}

DualSubdivision parse_subdivision(const json& j) {
  DualSubdivision s;
  s.dimension = j.contains("dimension") ? int_field(j, "dimension") : 2;
  for (const json& c : array_field(j, "cells")) {
    SubCell cell;
    for (const json& p : array_field(c, "vertices"))
      cell.vertices.push_back(parse_ij(p));
    s.cells.push_back(cell);
  }
  if (j.contains("support")) {
    for (const json& p : j["support"]) s.support.push_back(parse_ij(p));
  } else {
    // picture-style input: the support is the union of the cell vertices
    std::set<IJ> pts;
    for (const SubCell& c : s.cells) pts.insert(c.vertices.begin(), c.vertices.end());
    s.support.assign(pts.begin(), pts.end());
  }
  if (j.contains("newton_polygon")) {
    for (const json& p : j["newton_polygon"]) s.newton_polygon.push_back(parse_ij(p));
  } else {
    s.newton_polygon = lattice_hull(s.support);
  }
  if (j.contains("edges")) {
    for (const json& e : j["edges"]) {
      SubEdge edge;
      edge.a = parse_ij(field(e, "a"));
      edge.b = parse_ij(field(e, "b"));
      if (edge.b < edge.a) std::swap(edge.a, edge.b);
      for (const json& c : array_field(e, "cells")) {
        if (edge.ncells >= 2) bad("subdivision edge with more than two cells");
        int idx = c.get<int>();
        if (idx < 0 || idx >= static_cast<int>(s.cells.size()))
          bad("subdivision edge references a missing cell");
        edge.cells[edge.ncells++] = idx;
      }
      if (edge.ncells == 0) bad("subdivision edge with no incident cell");
      edge.weight = lattice_gcd(Vec2i{edge.b.i - edge.a.i, edge.b.j - edge.a.j});
      edge.boundary = (edge.ncells == 1);
      s.edges.push_back(edge);
    }
  } else if (s.dimension == 2) {
    // derive the edge table from consecutive cell hull vertices
    std::map<std::pair<IJ, IJ>, SubEdge> edges;
    for (size_t ci = 0; ci < s.cells.size(); ++ci) {
      std::vector<IJ> hull = lattice_hull(s.cells[ci].vertices);
      if (hull.size() != s.cells[ci].vertices.size())
        bad("cell vertices must be the corners of a convex lattice polygon");
      s.cells[ci].vertices = hull;
      for (size_t k = 0; k < hull.size(); ++k) {
        IJ u = hull[k], v = hull[(k + 1) % hull.size()];
        auto key = std::minmax(u, v);
        auto it = edges.find(key);
        if (it == edges.end()) {
          SubEdge edge;
          edge.a = key.first;
          edge.b = key.second;
          edge.cells[edge.ncells++] = static_cast<int>(ci);
          edge.weight = lattice_gcd(Vec2i{edge.b.i - edge.a.i, edge.b.j - edge.a.j});
          edges.emplace(key, edge);
        } else {
          if (it->second.ncells >= 2) bad("three cells share a subdivision edge");
          it->second.cells[it->second.ncells++] = static_cast<int>(ci);
        }
      }
    }
    for (auto& [key, e] : edges) {
      e.boundary = (e.ncells == 1);
      s.edges.push_back(e);
    }
  }
  if (j.contains("lifts")) {
    const json& lifts = j["lifts"];
    if (!lifts.is_array() || lifts.size() != s.support.size())
      bad("lifts must align with the support");
    for (const json& q : lifts) {
      if (!q.is_string()) bad("lift heights must be rational strings");
      s.lifts.push_back(parse_rational(q.get<std::string>()));
    }
    s.has_lift = true;
  }
  return s;
}

json curve_json(const TropicalCurve& c) {
  json vertices = json::array();
  for (const CurveVertex& v : c.vertices)
    vertices.push_back({{"x", rational_to_string(v.pos.x)},
                        {"y", rational_to_string(v.pos.y)}});
  json edges = json::array();
  for (const CurveEdge& e : c.edges)
    edges.push_back({{"v1", e.v1},
                     {"v2", e.v2},
                     {"weight", e.weight},
                     {"direction", dir_json(e.dir)}});
  json rays = json::array();
  for (const CurveRay& r : c.rays)
    rays.push_back({{"base", r.base},
                    {"direction", dir_json(r.dir)},
                    {"weight", r.weight}});
  json out = {{"schema", kSchema},      {"type", "curve"},
              {"degenerate", c.degenerate}, {"vertices", vertices},
              {"edges", edges},             {"rays", rays}};
  if (!c.dual.support.empty()) out["dual"] = subdivision_json(c.dual);
  return out;
}

TropicalCurve parse_curve(const json& j) {
  TropicalCurve c;
  if (!j.is_object()) bad("curve must be an object");
  c.degenerate = j.contains("degenerate") && j["degenerate"].is_boolean() &&
                 j["degenerate"].get<bool>();
  for (const json& v : array_field(j, "vertices")) {
    CurveVertex cv;
    cv.pos = {rat_field(v, "x"), rat_field(v, "y")};
    cv.cell = static_cast<int>(c.vertices.size());
    c.vertices.push_back(cv);
  }
  int nv = static_cast<int>(c.vertices.size());
  if (j.contains("edges"))
    for (const json& e : j["edges"]) {
      CurveEdge ce;
      ce.v1 = int_field(e, "v1");
      ce.v2 = int_field(e, "v2");
      if (ce.v1 < 0 || ce.v1 >= nv || ce.v2 < 0 || ce.v2 >= nv)
        bad("edge endpoint out of range");
      ce.weight = long_field(e, "weight");
      if (e.contains("direction")) {
        ce.dir = parse_dir(e["direction"]);
      } else {
        QPoint d = c.vertices[ce.v2].pos - c.vertices[ce.v1].pos;
        // derive the primitive direction from the endpoints
        Rational dx = d.x, dy = d.y;
        mpz_class num_x = dx.get_num() * dy.get_den();
        mpz_class num_y = dy.get_num() * dx.get_den();
        mpz_class g = gcd(abs(num_x), abs(num_y));
        if (g == 0) bad("zero-length edge");
        ce.dir = {mpz_class(num_x / g).get_si(), mpz_class(num_y / g).get_si()};
      }
      c.edges.push_back(ce);
    }
  if (j.contains("rays"))
    for (const json& r : j["rays"]) {
      CurveRay cr;
      cr.base = int_field(r, "base");
      if (cr.base < 0 || cr.base >= nv) bad("ray base out of range");
      cr.dir = parse_dir(field(r, "direction"));
      cr.weight = long_field(r, "weight");
      c.rays.push_back(cr);
    }
  if (j.contains("dual")) c.dual = parse_subdivision(j["dual"]);
  return c;
}

json intersection_points_json(const std::vector<IntersectionPoint>& pts) {
  json out = json::array();
  for (const IntersectionPoint& ip : pts) {
    json witnesses = json::array();
    for (const auto& [e1, e2] : ip.witnesses) witnesses.push_back(json::array({e1, e2}));
    out.push_back({{"x", rational_to_string(ip.p.x)},
                   {"y", rational_to_string(ip.p.y)},
                   {"mult", ip.mult},
                   {"kind", ip.kind == IntersectionPoint::Kind::StableLimit
                                ? "stable-limit"
                                : "transverse"},
                   {"witnesses", witnesses}});
  }
  return out;
}

json intersection_report_json(const std::vector<IntersectionPoint>& pts) {
  long long total = 0;
  for (const IntersectionPoint& ip : pts) total += ip.mult;
  return {{"schema", kSchema},
          {"points", intersection_points_json(pts)},
          {"total", total}};
}

json bezout_json(const BezoutReport& rep) {
  return {{"schema", kSchema},
          {"points", intersection_points_json(rep.points)},
          {"total", rep.total},
          {"d1", rep.d1},
          {"d2", rep.d2},
          {"bezout_ok", rep.ok}};
}

SurvivorSet parse_survivors(const json& j, size_t total_edges) {
  if (!j.is_array()) bad("survivor set must be an array");
  SurvivorSet s;
  s.survivors.assign(total_edges, {-1, -1});
  std::vector<bool> seen(total_edges, false);
  for (const json& entry : j) {
    int e = int_field(entry, "edge");
    if (e < 0 || e >= static_cast<int>(total_edges)) bad("survivor edge out of range");
    if (seen[e]) bad("survivor set lists an edge twice");
    seen[e] = true;
    const json& quads = array_field(entry, "quadrants");
    if (quads.size() != 2) bad("each edge keeps exactly two quadrant copies");
    Quadrant q[2];
    for (int k = 0; k < 2; ++k) {
      const json& qq = quads[k];
      if (!qq.is_array() || qq.size() != 2) bad("quadrant must be [eps1, eps2]");
      int e1 = qq[0].get<int>(), e2 = qq[1].get<int>();
      if ((e1 != 0 && e1 != 1) || (e2 != 0 && e2 != 1)) bad("quadrant bits must be 0 or 1");
      q[k] = quadrant_of(e1, e2);
    }
    s.survivors[e] = {std::min(q[0], q[1]), std::max(q[0], q[1])};
  }
  for (size_t e = 0; e < total_edges; ++e)
    if (!seen[e]) bad("survivor set misses edge " + std::to_string(e));
  return s;
}

json survivors_json(const SurvivorSet& s) {
  json out = json::array();
  for (size_t e = 0; e < s.survivors.size(); ++e) {
    auto [q1, q2] = s.survivors[e];
    auto b1 = quadrant_bits(q1);
    auto b2 = quadrant_bits(q2);
    out.push_back({{"edge", e},
                   {"quadrants", json::array({json::array({b1[0], b1[1]}),
                                              json::array({b2[0], b2[1]})})}});
  }
  return out;
}

json patchwork_validation_json(const PatchworkValidation& v) {
  json violations = json::array();
  for (const PatchworkViolation& viol : v.violations) {
    if (viol.type == PatchworkViolation::Type::EdgePairing) {
      violations.push_back({{"type", "edge-pairing"}, {"edge", viol.edge}});
    } else {
      auto b = quadrant_bits(viol.quadrant);
      violations.push_back({{"type", "vertex-parity"},
                            {"vertex", viol.vertex},
                            {"quadrant", json::array({b[0], b[1]})},
                            {"survivors", viol.survivor_count}});
    }
  }
  return {{"schema", kSchema}, {"ok", v.ok}, {"violations", violations}};
}

json enumeration_json(const std::vector<SurvivorSet>& sets, bool truncated) {
  json list = json::array();
  for (const SurvivorSet& s : sets) list.push_back({{"survivors", survivors_json(s)}});
  return {{"schema", kSchema},
          {"count", sets.size()},
          {"truncated", truncated},
          {"real_curves", list}};
}

json arrangement_stats_json(const ArrangementStats& st) {
  json nesting = json::array();
  json details = json::array();
  for (size_t k = 0; k < st.details.size(); ++k) {
    const ComponentInfo& ci = st.details[k];
    json quads = json::array();
    for (Quadrant q : ci.quadrants) {
      auto b = quadrant_bits(q);
      quads.push_back(json::array({b[0], b[1]}));
    }
    details.push_back({{"bounded", ci.bounded},
                       {"quadrants", quads},
                       {"unbounded_ends", ci.unbounded_ends},
                       {"parent", ci.parent}});
    if (ci.bounded) nesting.push_back({{"component", k}, {"parent", ci.parent}});
  }
  return {{"schema", kSchema},
          {"components", st.components},
          {"bounded", st.bounded},
          {"unbounded", st.unbounded},
          {"nesting", nesting},
          {"component_details", details}};
}

CoefficientFamily parse_family(const json& j) {
  CoefficientFamily f;
  const json& terms = j.contains("terms") ? array_field(j, "terms")
                                          : array_field(field(j, "family"), "terms");
  for (const json& t : terms) {
    FamilyTerm ft;
    ft.ij = {int_field(t, "i"), int_field(t, "j")};
    for (const json& s : array_field(t, "series")) {
      SeriesTerm st;
      st.r = parse_rational(str_field(s, "r"));
      const json& beta = array_field(s, "beta");
      if (beta.size() != 2 || !beta[0].is_string() || !beta[1].is_string())
        bad("beta must be [re, im] as rational strings");
      st.beta_re = parse_rational(beta[0].get<std::string>());
      st.beta_im = parse_rational(beta[1].get<std::string>());
      ft.series.push_back(st);
    }
    f.terms.push_back(ft);
  }
  validate_family(f);
  return f;
}

json family_json(const CoefficientFamily& f) {
  json terms = json::array();
  for (const FamilyTerm& ft : f.terms) {
    json series = json::array();
    for (const SeriesTerm& st : ft.series)
      series.push_back({{"r", rational_to_string(st.r)},
                        {"beta", json::array({rational_to_string(st.beta_re),
                                              rational_to_string(st.beta_im)})}});
    terms.push_back({{"i", ft.ij.i}, {"j", ft.ij.j}, {"series", series}});
  }
  return {{"schema", kSchema}, {"terms", terms}};
}

GridSpec parse_grid(const json& j) {
  GridSpec g;
  if (j.contains("moduli")) g.moduli = int_field(j, "moduli");
  if (j.contains("phases")) g.phases = int_field(j, "phases");
  if (j.contains("pad")) {
    if (!j["pad"].is_number()) bad("pad must be a number");
    g.pad = j["pad"].get<double>();
  }
  if (g.moduli < 1 || g.phases < 1 || g.pad < 0)
    throw Error(ErrorKind::InvalidArgument, "invalid grid specification");
  return g;
}

json grid_json(const GridSpec& g) {
  return {{"moduli", g.moduli}, {"phases", g.phases}, {"pad", g.pad}};
}

json sample_json(const AmoebaSample& s) {
  json pts = json::array();
  for (const auto& p : s.points) pts.push_back(json::array({p[0], p[1]}));
  return {{"schema", kSchema},
          {"t", s.t},
          {"grid", grid_json(s.grid)},
          {"window", json::array({s.window[0], s.window[1], s.window[2], s.window[3]})},
          {"residual_tol", s.residual_tol},
          {"max_kept_residual", s.max_kept_residual},
          {"kept", s.kept},
          {"rejected", s.rejected},
          {"points", pts}};
}

AmoebaSample parse_sample(const json& j) {
  AmoebaSample s;
  s.t = field(j, "t").get<double>();
  if (j.contains("grid")) s.grid = parse_grid(j["grid"]);
  if (j.contains("window")) {
    const json& w = array_field(j, "window");
    if (w.size() != 4) bad("window must be [x0, y0, x1, y1]");
    for (int k = 0; k < 4; ++k) s.window[k] = w[k].get<double>();
  }
  for (const json& p : array_field(j, "points")) {
    if (!p.is_array() || p.size() != 2) bad("sample point must be [x, y]");
    s.points.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  s.kept = s.points.size();
  return s;
}

json convergence_json(const ConvergenceReport& r) {
  return {{"schema", kSchema},
          {"t", r.t_values},
          {"dev", r.dev},
          {"cov", r.cov},
          {"dev_strictly_decreasing", r.dev_strictly_decreasing},
          {"fit_c_over_ln_t", r.fit_c_over_ln_t},
          {"window", json::array({r.window[0], r.window[1], r.window[2], r.window[3]})}};
}

json dequant_json(const DequantResult& r, int digits) {
  return {{"schema", kSchema},
          {"value", r.value},
          {"decimal", r.decimal},
          {"digits", digits},
          {"max", rational_to_string(r.lower)},
          {"bound_log_t_2", r.bound}};
}

json degree_json(const DegreeReport& rep) {
  return {{"schema", kSchema},
          {"degree", rep.degree},
          {"standard_support", rep.standard_support},
          {"ray_weight_sums",
           {{"left", rep.sum_left}, {"down", rep.sum_down}, {"diag", rep.sum_diag}}}};
}

json balance_json(const BalanceReport& rep) {
  return {{"schema", kSchema},
          {"ok", rep.ok},
          {"malformed", rep.malformed},
          {"malformed_reasons", rep.malformed_reasons},
          {"unbalanced_vertices", rep.violating_vertices}};
}

json error_json(const Error& e) {
  json detail;
  if (!e.detail_json().empty()) {
    try {
      detail = json::parse(e.detail_json());
    } catch (const json::exception&) {
      detail = e.detail_json();
    }
  }
  json out = {{"error",
               {{"kind", Error::kind_name(e.kind())}, {"message", e.what()}}}};
  if (!detail.is_null()) out["error"]["detail"] = detail;
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace tropica::io
