#pragma once

#include <array>
#include <optional>
#include <string>

#include "tropica/amoeba.hpp"
#include "tropica/curve.hpp"
#include "tropica/patchwork.hpp"

namespace tropica {

// Presentation settings. Rays are clipped to the viewport; weight-w edges are
// drawn w times the base stroke width; weights >= 2 are labelled.
struct RenderSpec {
  std::optional<std::array<double, 4>> viewport;  // x0, y0, x1, y1 (world)
  double pad_fraction = 0.2;                      // auto-viewport padding
  bool labels = true;
};

// Renders are deterministic: identical input produces byte-identical output
// (fixed 6-decimal formatting, no generated ids).
std::string svg_curve(const TropicalCurve& c, const RenderSpec& spec);
std::string svg_subdivision(const DualSubdivision& s, const RenderSpec& spec);
std::string svg_patchwork(const TropicalCurve& c, const SurvivorSet& survivors,
                          const RenderSpec& spec);
std::string svg_amoeba(const AmoebaSample& sample, const TropicalCurve& c,
                       const RenderSpec& spec);

}  // namespace tropica
