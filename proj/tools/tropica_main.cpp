// tropica: command-line front end over the shared-library C API.
// Every subcommand reads JSON (file or stdin), writes JSON to stdout and
// optionally an SVG next to it. Exit codes: 0 success, 1 domain error
// (error JSON on stderr), 2 malformed input or usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "tropica.h"

namespace {

using nlohmann::json;

struct CommonOpts {
  std::string input = "-";
  std::string svg_path;
  std::string viewport;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "{\"error\":{\"kind\":\"io\",\"message\":\"cannot open " << path
              << "\"}}\n";
    std::exit(2);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int exit_code_for(tropica_status st) {
  switch (st) {
    case TROPICA_OK:
      return 0;
    case TROPICA_ERROR_DOMAIN:
      return 1;
    default:
      return 2;
  }
}

[[noreturn]] void fail(tropica_status st) {
  const char* err = tropica_last_error();
  std::cerr << (err ? err : "{\"error\":{\"kind\":\"unknown\"}}");
  std::exit(exit_code_for(st));
}

void check(tropica_status st) {
  if (st != TROPICA_OK) fail(st);
}

void emit(char* owned) {
  std::cout << owned;
  tropica_string_free(owned);
}

void write_svg(const std::string& path, char* owned) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    tropica_string_free(owned);
    std::cerr << "{\"error\":{\"kind\":\"io\",\"message\":\"cannot write " << path
              << "\"}}\n";
    std::exit(2);
  }
  out << owned;
  tropica_string_free(owned);
}

std::string render_json(const CommonOpts& opts) {
  if (opts.viewport.empty()) return "{}";
  json vp = json::array();
  std::stringstream ss(opts.viewport);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      vp.push_back(std::stod(tok));
    } catch (...) {
      std::cerr << "{\"error\":{\"kind\":\"parse\",\"message\":\"bad --viewport\"}}\n";
      std::exit(2);
    }
  }
  if (vp.size() != 4) {
    std::cerr << "{\"error\":{\"kind\":\"parse\",\"message\":\"--viewport needs "
                 "x0,y0,x1,y1\"}}\n";
    std::exit(2);
  }
  return json{{"viewport", vp}}.dump();
}

json parse_or_die(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    std::cerr << "{\"error\":{\"kind\":\"parse\",\"message\":\"invalid JSON: "
              << e.what() << "\"}}\n";
    std::exit(2);
  }
}

// accepts the object itself or one nested under `key`
std::string unwrap(const json& doc, const char* key) {
  if (doc.is_object() && doc.contains(key)) return doc[key].dump();
  return doc.dump();
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_svg = false) {
  cmd->add_option("--input", opts.input, "input JSON path, or - for stdin");
  if (with_svg) {
    cmd->add_option("--svg", opts.svg_path, "write an SVG rendering here");
    cmd->add_option("--viewport", opts.viewport, "explicit viewport x0,y0,x1,y1");
  }
}

tropica_unipoly* load_unipoly(const json& doc) {
  tropica_unipoly* p = nullptr;
  check(tropica_unipoly_parse(unwrap(doc, "poly").c_str(), &p));
  return p;
}

tropica_bipoly* load_bipoly(const json& doc, const char* key = "poly") {
  tropica_bipoly* p = nullptr;
  check(tropica_bipoly_parse(unwrap(doc, key).c_str(), &p));
  return p;
}

// curve from either a curve object or a polynomial
tropica_curve* load_curve(const json& doc) {
  if (doc.is_object() && doc.contains("curve")) {
    tropica_curve* c = nullptr;
    check(tropica_curve_parse(doc["curve"].dump().c_str(), &c));
    return c;
  }
  tropica_bipoly* p = load_bipoly(doc);
  tropica_curve* c = nullptr;
  check(tropica_bipoly_curve(p, &c));
  tropica_bipoly_free(p);
  return c;
}

std::pair<tropica_curve*, tropica_curve*> load_curve_pair(const json& doc) {
  auto one = [&](const char* ckey, const char* pkey) -> tropica_curve* {
    if (doc.contains(ckey)) {
      tropica_curve* c = nullptr;
      check(tropica_curve_parse(doc[ckey].dump().c_str(), &c));
      return c;
    }
    tropica_bipoly* p = load_bipoly(doc, pkey);
    tropica_curve* c = nullptr;
    check(tropica_bipoly_curve(p, &c));
    tropica_bipoly_free(p);
    return c;
  };
  return {one("c1", "p1"), one("c2", "p2")};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropica: exact tropical plane curves, intersections, "
               "patchworking and amoebas"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string t_flag;
  std::string grid_flag;
  long limit = 64;

  auto* cmd_eval = app.add_subcommand("eval", "evaluate a univariate polynomial");
  add_common(cmd_eval, opts);
  auto* cmd_roots = app.add_subcommand("roots", "roots with multiplicity");
  add_common(cmd_roots, opts);
  auto* cmd_factor = app.add_subcommand("factor", "factor into linear factors");
  add_common(cmd_factor, opts);

  auto* cmd_curve = app.add_subcommand("curve", "tropical curve of a bivariate polynomial");
  add_common(cmd_curve, opts, true);
  auto* cmd_dual = app.add_subcommand("dual", "dual subdivision of the Newton polygon");
  add_common(cmd_dual, opts, true);
  auto* cmd_balance = app.add_subcommand("balance", "check the balancing condition");
  add_common(cmd_balance, opts);

  auto* cmd_intersect = app.add_subcommand("intersect", "transverse intersections");
  add_common(cmd_intersect, opts);
  auto* cmd_stable = app.add_subcommand("stable", "stable intersections");
  add_common(cmd_stable, opts);
  auto* cmd_bezout = app.add_subcommand("bezout", "stable-intersection Bezout report");
  add_common(cmd_bezout, opts);

  auto* cmd_patch = app.add_subcommand("patchwork", "combinatorial patchworking");
  cmd_patch->require_subcommand(1);
  auto* cmd_pv = cmd_patch->add_subcommand("validate", "check a survivor set");
  add_common(cmd_pv, opts);
  auto* cmd_pe = cmd_patch->add_subcommand("enumerate", "enumerate real tropical curves");
  add_common(cmd_pe, opts);
  cmd_pe->add_option("--limit", limit, "maximum results (negative = all)");
  auto* cmd_ps = cmd_patch->add_subcommand("stats", "arrangement statistics");
  add_common(cmd_ps, opts, true);

  auto* cmd_amoeba = app.add_subcommand("amoeba", "amoebas of coefficient families");
  cmd_amoeba->require_subcommand(1);
  auto* cmd_as = cmd_amoeba->add_subcommand("sample", "sample Log_t of the curve");
  add_common(cmd_as, opts, true);
  cmd_as->add_option("--t", t_flag, "base of the logarithm (rational, > 1)");
  cmd_as->add_option("--grid", grid_flag, "grid as MODULI,PHASES");
  auto* cmd_ac = cmd_amoeba->add_subcommand("converge", "deviation/coverage per t");
  add_common(cmd_ac, opts);
  cmd_ac->add_option("--grid", grid_flag, "grid as MODULI,PHASES");

  auto* cmd_dequant = app.add_subcommand("dequant", "x +_t y = log_t(t^x + t^y)");
  add_common(cmd_dequant, opts);
  cmd_dequant->add_option("--t", t_flag, "base t (rational, > 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      app.exit(e);
      return 0;
    }
    std::cerr << e.what() << "\n\n" << app.help() << "\n";
    return 2;
  }

  std::string grid_json = "{}";
  if (!grid_flag.empty()) {
    int moduli = 0, phases = 0;
    if (std::sscanf(grid_flag.c_str(), "%d,%d", &moduli, &phases) != 2) {
      std::cerr << "{\"error\":{\"kind\":\"parse\",\"message\":\"--grid needs "
                   "MODULI,PHASES\"}}\n";
      return 2;
    }
    grid_json = json{{"moduli", moduli}, {"phases", phases}}.dump();
  }

  if (cmd_eval->parsed()) {
    json doc = parse_or_die(read_input(opts.input));
    if (!doc.contains("x")) {
      std::cerr << "{\"error\":{\"kind\":\"parse\",\"message\":\"eval input needs "
                   "{\\\"poly\\\":...,\\\"x\\\":...}\"}}\n";
      return 2;
    }
    tropica_unipoly* p = load_unipoly(doc);
    char* value = nullptr;
    check(tropica_unipoly_eval(p, doc["x"].get<std::string>().c_str(), &value));
    json out = {{"schema", "tropica/1"}, {"value", value}};
    tropica_string_free(value);
    tropica_unipoly_free(p);
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (cmd_roots->parsed() || cmd_factor->parsed()) {
    json doc = parse_or_die(read_input(opts.input));
    tropica_unipoly* p = load_unipoly(doc);
    char* out = nullptr;
    check(cmd_roots->parsed() ? tropica_unipoly_roots(p, &out)
                              : tropica_unipoly_factor(p, &out));
    tropica_unipoly_free(p);
    emit(out);
    return 0;
  }

  if (cmd_curve->parsed()) {
    json doc = parse_or_die(read_input(opts.input));
    tropica_bipoly* p = load_bipoly(doc);
    tropica_curve* c = nullptr;
    check(tropica_bipoly_curve(p, &c));
    char* out = nullptr;
    check(tropica_curve_to_json(c, &out));
    if (!opts.svg_path.empty()) {
      char* svg = nullptr;
      check(tropica_svg_curve(c, render_json(opts).c_str(), &svg));
      write_svg(opts.svg_path, svg);
    }
    tropica_curve_free(c);
    tropica_bipoly_free(p);
    emit(out);
    return 0;
  }

  if (cmd_dual->parsed()) {
    json doc = parse_or_die(read_input(opts.input));
    tropica_bipoly* p = load_bipoly(doc);
    char* out = nullptr;
    check(tropica_bipoly_dual_json(p, &out));
    if (!opts.svg_path.empty()) {
      char* svg = nullptr;
      check(tropica_svg_dual(p, render_json(opts).c_str(), &svg));
      write_svg(opts.svg_path, svg);
    }
    tropica_bipoly_free(p);
    emit(out);
    return 0;
  }

  if (cmd_balance->parsed()) {
    json doc = parse_or_die(read_input(opts.input));
    char* out = nullptr;
    check(tropica_balance_check(unwrap(doc, "curve").c_str(), &out));
    emit(out);
    return 0;
  }

  if (cmd_intersect->parsed() || cmd_stable->parsed()) {
    json doc = parse_or_die(read_input(opts.input));
    auto [c1, c2] = load_curve_pair(doc);
    char* out = nullptr;
    check(cmd_intersect->parsed() ? tropica_intersect_transverse(c1, c2, &out)
                                  : tropica_intersect_stable(c1, c2, &out));
    tropica_curve_free(c1);
    tropica_curve_free(c2);
    emit(out);
    return 0;
  }

  if (cmd_bezout->parsed()) {
    json doc = parse_or_die(read_input(opts.input));
    tropica_bipoly* p1 = load_bipoly(doc, "p1");
    tropica_bipoly* p2 = load_bipoly(doc, "p2");
    char* out = nullptr;
    check(tropica_bezout(p1, p2, &out));
    tropica_bipoly_free(p1);
    tropica_bipoly_free(p2);
    emit(out);
    return 0;
  }

  if (cmd_pv->parsed() || cmd_ps->parsed()) {
    json doc = parse_or_die(read_input(opts.input));
    if (!doc.contains("survivors")) {
      std::cerr << "{\"error\":{\"kind\":\"parse\",\"message\":\"patchwork input "
                   "needs a survivors array\"}}\n";
      return 2;
    }
    tropica_curve* c = load_curve(doc);
    std::string survivors = doc["survivors"].dump();
    char* out = nullptr;
    check(cmd_pv->parsed()
              ? tropica_patchwork_validate(c, survivors.c_str(), &out)
              : tropica_patchwork_stats(c, survivors.c_str(), &out));
    if (cmd_ps->parsed() && !opts.svg_path.empty()) {
      char* svg = nullptr;
      check(tropica_svg_patchwork(c, survivors.c_str(), render_json(opts).c_str(), &svg));
      write_svg(opts.svg_path, svg);
    }
    tropica_curve_free(c);
    emit(out);
    return 0;
  }

  if (cmd_pe->parsed()) {
    json doc = parse_or_die(read_input(opts.input));
    tropica_curve* c = load_curve(doc);
    char* out = nullptr;
    check(tropica_patchwork_enumerate(c, limit, &out));
    tropica_curve_free(c);
    emit(out);
    return 0;
  }

  if (cmd_as->parsed()) {
    json doc = parse_or_die(read_input(opts.input));
    std::string family = unwrap(doc, "family");
    std::string t = !t_flag.empty() ? t_flag
                    : doc.contains("t") ? doc["t"].get<std::string>()
                                        : "";
    if (t.empty()) {
      std::cerr << "{\"error\":{\"kind\":\"parse\",\"message\":\"amoeba sample "
                   "needs --t or a t field\"}}\n";
      return 2;
    }
    char* out = nullptr;
    check(tropica_amoeba_sample(family.c_str(), t.c_str(), grid_json.c_str(), &out));
    if (!opts.svg_path.empty()) {
      char* svg = nullptr;
      check(tropica_svg_amoeba(out, family.c_str(), render_json(opts).c_str(), &svg));
      write_svg(opts.svg_path, svg);
    }
    emit(out);
    return 0;
  }

  if (cmd_ac->parsed()) {
    json doc = parse_or_die(read_input(opts.input));
    if (!grid_flag.empty()) doc["grid"] = json::parse(grid_json);
    char* out = nullptr;
    check(tropica_amoeba_converge(doc.dump().c_str(), &out));
    emit(out);
    return 0;
  }

  if (cmd_dequant->parsed()) {
    json doc = parse_or_die(read_input(opts.input));
    std::string t = !t_flag.empty() ? t_flag
                    : doc.contains("t") ? doc["t"].get<std::string>()
                                        : "";
    if (!doc.contains("x") || !doc.contains("y") || t.empty()) {
      std::cerr << "{\"error\":{\"kind\":\"parse\",\"message\":\"dequant needs x, "
                   "y and t\"}}\n";
      return 2;
    }
    int precision = doc.contains("precision") ? doc["precision"].get<int>() : 17;
    char* out = nullptr;
    check(tropica_dequant_add(doc["x"].get<std::string>().c_str(),
                              doc["y"].get<std::string>().c_str(), t.c_str(),
                              precision, &out));
    emit(out);
    return 0;
  }

  std::cerr << app.help() << "\n";
  return 2;
}
