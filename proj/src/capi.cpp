#include "tropica.h"

#include <cstring>
#include <string>

#include "tropica/dequant.hpp"
#include "tropica/hyper.hpp"
#include "tropica/json_io.hpp"
#include "tropica/svg.hpp"

using namespace tropica;
using io::json;

struct tropica_unipoly {
  UniPoly value;
};
struct tropica_bipoly {
  BiPoly value;
};
struct tropica_curve {
  TropicalCurve value;
};

namespace {

thread_local std::string g_last_error;

tropica_status status_of(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse:
      return TROPICA_ERROR_PARSE;
    case ErrorKind::InvalidArgument:
      return TROPICA_ERROR_INVALID_ARGUMENT;
    default:
      return TROPICA_ERROR_DOMAIN;
  }
}

tropica_status fail(const Error& e) {
  g_last_error = io::dump(io::error_json(e));
  return status_of(e);
}

tropica_status fail_other(const std::exception& e) {
  g_last_error = io::dump(json{{"error", {{"kind", "internal"}, {"message", e.what()}}}});
  return TROPICA_ERROR_DOMAIN;
}

char* copy_out(const std::string& s) {
  char* buf = new char[s.size() + 1];
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return buf;
}

// runs the body, mapping exceptions to status codes
template <class F>
tropica_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return TROPICA_OK;
  } catch (const Error& e) {
    return fail(e);
  } catch (const std::exception& e) {
    return fail_other(e);
  }
}

void require_arg(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, what);
}

RenderSpec parse_render(const char* render_json) {
  RenderSpec spec;
  if (render_json == nullptr || *render_json == '\0') return spec;
  json j = io::parse_document(render_json);
  if (j.contains("viewport")) {
    const json& v = j["viewport"];
    if (!v.is_array() || v.size() != 4)
      throw Error(ErrorKind::Parse, "viewport must be [x0, y0, x1, y1]");
    spec.viewport = {{v[0].get<double>(), v[1].get<double>(), v[2].get<double>(),
                      v[3].get<double>()}};
  }
  if (j.contains("pad_fraction")) spec.pad_fraction = j["pad_fraction"].get<double>();
  if (j.contains("labels")) spec.labels = j["labels"].get<bool>();
  if (spec.pad_fraction < 0)
    throw Error(ErrorKind::InvalidArgument, "pad_fraction must be >= 0");
  return spec;
}

SurvivorSet survivors_for(const TropicalCurve& c, const char* survivors_json) {
  require_arg(survivors_json != nullptr, "survivors JSON is null");
  return io::parse_survivors(io::parse_document(survivors_json), c.total_edges());
}

}  // namespace

extern "C" {

const char* tropica_version(void) { return "tropica 1.0.0"; }

const char* tropica_last_error(void) {
  return g_last_error.empty() ? nullptr : g_last_error.c_str();
}

void tropica_string_free(char* s) { delete[] s; }

/* ---- univariate ---------------------------------------------------- */

tropica_status tropica_unipoly_parse(const char* text, tropica_unipoly** out) {
  return guarded([&] {
    require_arg(text && out, "null argument");
    *out = new tropica_unipoly{io::parse_unipoly(io::parse_document(text))};
  });
}

void tropica_unipoly_free(tropica_unipoly* p) { delete p; }

tropica_status tropica_unipoly_to_json(const tropica_unipoly* p, char** json_out) {
  return guarded([&] {
    require_arg(p && json_out, "null argument");
    *json_out = copy_out(io::dump(io::unipoly_json(p->value)));
  });
}

tropica_status tropica_unipoly_eval(const tropica_unipoly* p, const char* x,
                                    char** value_out) {
  return guarded([&] {
    require_arg(p && x && value_out, "null argument");
    *value_out = copy_out(tropical_to_string(eval_uni(p->value, parse_tropical(x))));
  });
}

tropica_status tropica_unipoly_canonicalize(const tropica_unipoly* p,
                                            tropica_unipoly** out) {
  return guarded([&] {
    require_arg(p && out, "null argument");
    *out = new tropica_unipoly{canonicalize(p->value)};
  });
}

tropica_status tropica_unipoly_roots(const tropica_unipoly* p, char** json_out) {
  return guarded([&] {
    require_arg(p && json_out, "null argument");
    *json_out = copy_out(io::dump(io::rootlist_json(roots_uni(p->value))));
  });
}

tropica_status tropica_unipoly_factor(const tropica_unipoly* p, char** json_out) {
  return guarded([&] {
    require_arg(p && json_out, "null argument");
    *json_out = copy_out(io::dump(io::factorization_json(factor_uni(p->value))));
  });
}

tropica_status tropica_expand_factors(const char* factorization_json,
                                      tropica_unipoly** out) {
  return guarded([&] {
    require_arg(factorization_json && out, "null argument");
    json j = io::parse_document(factorization_json);
    TropicalNumber leading = parse_tropical(j.at("leading").get<std::string>());
    RootList roots = io::parse_rootlist(j.at("roots"));
    *out = new tropica_unipoly{expand_linear_factors(leading, roots)};
  });
}

tropica_status tropica_unipoly_hyper_eval(const tropica_unipoly* p, const char* x,
                                          char** json_out) {
  return guarded([&] {
    require_arg(p && x && json_out, "null argument");
    DownSet d = hyper_eval_uni(p->value, parse_tropical(x));
    json j = {{"schema", io::kSchema},
              {"kind", d.is_ray() ? "closed-ray" : "singleton"},
              {"value", tropical_to_string(d.value())}};
    *json_out = copy_out(io::dump(j));
  });
}

/* ---- bivariate / curves -------------------------------------------- */

tropica_status tropica_bipoly_parse(const char* text, tropica_bipoly** out) {
  return guarded([&] {
    require_arg(text && out, "null argument");
    *out = new tropica_bipoly{io::parse_bipoly(io::parse_document(text))};
  });
}

void tropica_bipoly_free(tropica_bipoly* p) { delete p; }

tropica_status tropica_bipoly_to_json(const tropica_bipoly* p, char** json_out) {
  return guarded([&] {
    require_arg(p && json_out, "null argument");
    *json_out = copy_out(io::dump(io::bipoly_json(p->value)));
  });
}

tropica_status tropica_bipoly_curve(const tropica_bipoly* p, tropica_curve** out) {
  return guarded([&] {
    require_arg(p && out, "null argument");
    *out = new tropica_curve{tropical_curve(p->value)};
  });
}

tropica_status tropica_bipoly_dual_json(const tropica_bipoly* p, char** json_out) {
  return guarded([&] {
    require_arg(p && json_out, "null argument");
    *json_out = copy_out(io::dump(io::subdivision_json(dual_subdivision(p->value))));
  });
}

tropica_status tropica_curve_parse(const char* text, tropica_curve** out) {
  return guarded([&] {
    require_arg(text && out, "null argument");
    *out = new tropica_curve{io::parse_curve(io::parse_document(text))};
  });
}

void tropica_curve_free(tropica_curve* c) { delete c; }

tropica_status tropica_curve_to_json(const tropica_curve* c, char** json_out) {
  return guarded([&] {
    require_arg(c && json_out, "null argument");
    *json_out = copy_out(io::dump(io::curve_json(c->value)));
  });
}

tropica_status tropica_curve_degree(const tropica_curve* c, char** json_out) {
  return guarded([&] {
    require_arg(c && json_out, "null argument");
    *json_out = copy_out(io::dump(io::degree_json(curve_degree(c->value))));
  });
}

tropica_status tropica_balance_check(const char* graph_json, char** json_out) {
  return guarded([&] {
    require_arg(graph_json && json_out, "null argument");
    TropicalCurve g = io::parse_curve(io::parse_document(graph_json));
    *json_out = copy_out(io::dump(io::balance_json(check_balancing(g))));
  });
}

tropica_status tropica_curve_from_dual(const char* subdivision_json,
                                       const char* anchor_x, const char* anchor_y,
                                       tropica_curve** out) {
  return guarded([&] {
    require_arg(subdivision_json && anchor_x && anchor_y && out, "null argument");
    DualSubdivision s = io::parse_subdivision(io::parse_document(subdivision_json));
    QPoint anchor{parse_rational(anchor_x), parse_rational(anchor_y)};
    *out = new tropica_curve{curve_from_dual_description(s, anchor)};
  });
}

tropica_status tropica_line_graph_with_tail(const char* a, const char* b,
                                            tropica_curve** out) {
  return guarded([&] {
    require_arg(a && b && out, "null argument");
    *out = new tropica_curve{line_graph_with_tail(parse_tropical(a), parse_tropical(b))};
  });
}

/* ---- intersection --------------------------------------------------- */

tropica_status tropica_union_curve(const tropica_bipoly* p1,
                                   const tropica_bipoly* p2,
                                   tropica_bipoly** product_out,
                                   tropica_curve** curve_out) {
  return guarded([&] {
    require_arg(p1 && p2 && product_out && curve_out, "null argument");
    auto [q, c] = union_curve(p1->value, p2->value);
    *product_out = new tropica_bipoly{std::move(q)};
    *curve_out = new tropica_curve{std::move(c)};
  });
}

tropica_status tropica_intersect_transverse(const tropica_curve* c1,
                                            const tropica_curve* c2,
                                            char** json_out) {
  return guarded([&] {
    require_arg(c1 && c2 && json_out, "null argument");
    TransverseResult res = transverse_intersections(c1->value, c2->value);
    if (!res.ok) {
      const char* reason = res.reason == NonTransverseReason::VertexOnCurve
                               ? "vertex-on-curve"
                               : "overlapping-parallel-edges";
      throw Error(ErrorKind::NonTransverse,
                  std::string("curves are not transverse (") + reason +
                      "); use stable intersection",
                  std::string("{\"reason\":\"") + reason + "\"}");
    }
    *json_out = copy_out(io::dump(io::intersection_report_json(res.points)));
  });
}

tropica_status tropica_intersect_stable(const tropica_curve* c1,
                                        const tropica_curve* c2, char** json_out) {
  return guarded([&] {
    require_arg(c1 && c2 && json_out, "null argument");
    auto pts = stable_intersections(c1->value, c2->value);
    *json_out = copy_out(io::dump(io::intersection_report_json(pts)));
  });
}

tropica_status tropica_bezout(const tropica_bipoly* p1, const tropica_bipoly* p2,
                              char** json_out) {
  return guarded([&] {
    require_arg(p1 && p2 && json_out, "null argument");
    *json_out = copy_out(io::dump(io::bezout_json(bezout_check(p1->value, p2->value))));
  });
}

/* ---- patchworking ---------------------------------------------------- */

tropica_status tropica_patchwork_validate(const tropica_curve* c,
                                          const char* survivors_json,
                                          char** json_out) {
  return guarded([&] {
    require_arg(c && json_out, "null argument");
    SurvivorSet s = survivors_for(c->value, survivors_json);
    *json_out = copy_out(
        io::dump(io::patchwork_validation_json(patchwork_validate(c->value, s))));
  });
}

tropica_status tropica_patchwork_enumerate(const tropica_curve* c, long limit,
                                           char** json_out) {
  return guarded([&] {
    require_arg(c && json_out, "null argument");
    auto sets = patchwork_enumerate(c->value, limit);
    bool truncated = limit >= 0 && static_cast<long>(sets.size()) == limit;
    *json_out = copy_out(io::dump(io::enumeration_json(sets, truncated)));
  });
}

tropica_status tropica_patchwork_stats(const tropica_curve* c,
                                       const char* survivors_json,
                                       char** json_out) {
  return guarded([&] {
    require_arg(c && json_out, "null argument");
    SurvivorSet s = survivors_for(c->value, survivors_json);
    *json_out = copy_out(
        io::dump(io::arrangement_stats_json(arrangement_stats(c->value, s))));
  });
}

/* ---- amoebas / dequantisation ----------------------------------------- */

tropica_status tropica_amoeba_sample(const char* family_json, const char* t,
                                     const char* grid_json, char** json_out) {
  return guarded([&] {
    require_arg(family_json && t && json_out, "null argument");
    CoefficientFamily f = io::parse_family(io::parse_document(family_json));
    GridSpec grid;
    if (grid_json && *grid_json) grid = io::parse_grid(io::parse_document(grid_json));
    AmoebaSample s = sample_amoeba(f, parse_rational(t), grid);
    *json_out = copy_out(io::dump(io::sample_json(s)));
  });
}

tropica_status tropica_amoeba_converge(const char* request_json, char** json_out) {
  return guarded([&] {
    require_arg(request_json && json_out, "null argument");
    json j = io::parse_document(request_json);
    CoefficientFamily f = io::parse_family(
        j.contains("family") ? j.at("family") : j);
    GridSpec grid;
    if (j.contains("grid")) grid = io::parse_grid(j.at("grid"));
    std::vector<Rational> ts;
    for (const json& tv : j.at("t_values"))
      ts.push_back(parse_rational(tv.get<std::string>()));
    ConvergenceReport rep = convergence_report(f, ts, grid);
    *json_out = copy_out(io::dump(io::convergence_json(rep)));
  });
}

tropica_status tropica_dequant_add(const char* x, const char* y, const char* t,
                                   int precision, char** json_out) {
  return guarded([&] {
    require_arg(x && y && t && json_out, "null argument");
    DequantResult r = dequant_add(parse_rational(x), parse_rational(y),
                                  parse_rational(t), precision);
    *json_out = copy_out(io::dump(io::dequant_json(r, precision)));
  });
}

/* ---- SVG ---------------------------------------------------------------- */

tropica_status tropica_svg_curve(const tropica_curve* c, const char* render_json,
                                 char** svg_out) {
  return guarded([&] {
    require_arg(c && svg_out, "null argument");
    *svg_out = copy_out(svg_curve(c->value, parse_render(render_json)));
  });
}

tropica_status tropica_svg_dual(const tropica_bipoly* p, const char* render_json,
                                char** svg_out) {
  return guarded([&] {
    require_arg(p && svg_out, "null argument");
    *svg_out = copy_out(
        svg_subdivision(dual_subdivision(p->value), parse_render(render_json)));
  });
}

tropica_status tropica_svg_patchwork(const tropica_curve* c,
                                     const char* survivors_json,
                                     const char* render_json, char** svg_out) {
  return guarded([&] {
    require_arg(c && svg_out, "null argument");
    SurvivorSet s = survivors_for(c->value, survivors_json);
    *svg_out = copy_out(svg_patchwork(c->value, s, parse_render(render_json)));
  });
}

tropica_status tropica_svg_amoeba(const char* sample_json, const char* family_json,
                                  const char* render_json, char** svg_out) {
  return guarded([&] {
    require_arg(sample_json && family_json && svg_out, "null argument");
    AmoebaSample s = io::parse_sample(io::parse_document(sample_json));
    CoefficientFamily f = io::parse_family(io::parse_document(family_json));
    TropicalCurve curve = tropical_curve(f.induced_tropical());
    *svg_out = copy_out(svg_amoeba(s, curve, parse_render(render_json)));
  });
}

} /* extern "C" */
