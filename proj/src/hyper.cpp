#include "tropica/hyper.hpp"

#include "tropica/error.hpp"

namespace tropica {

DownSet hyper_eval_uni(const UniPoly& p, const TropicalNumber& x) {
  bool first = true;
  DownSet acc = DownSet::singleton(TropicalNumber::bottom());
  for (const auto& [i, a] : p.terms()) {
    TropicalNumber v = trop_mul(a, trop_pow(x, i));
    if (first) {
      acc = DownSet::singleton(v);
      first = false;
    } else {
      acc = hyper_fold(acc, v);
    }
  }
  return acc;
}

TropicalCurve line_graph_with_tail(const TropicalNumber& a,
                                   const TropicalNumber& b) {
  if (a.is_bottom() || b.is_bottom())
    throw Error(ErrorKind::Domain, "line_graph_with_tail requires finite a, b");

  TropicalCurve c;
  CurveVertex v;
  v.pos = {b.finite() - a.finite(), b.finite()};
  c.vertices.push_back(v);
  // graph of max(a+x, b): horizontal to the left, slope 1 to the right;
  // the hyperfield tail points straight down
  c.rays.push_back({0, Vec2i{-1, 0}, 1, -1});
  c.rays.push_back({0, Vec2i{0, -1}, 1, -1});
  c.rays.push_back({0, Vec2i{1, 1}, 1, -1});
  return c;
}

}  // namespace tropica
