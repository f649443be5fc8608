#pragma once

#include <json.hpp>

#include "tropica/amoeba.hpp"
#include "tropica/curve.hpp"
#include "tropica/dequant.hpp"
#include "tropica/error.hpp"
#include "tropica/intersect.hpp"
#include "tropica/patchwork.hpp"
#include "tropica/unipoly.hpp"

namespace tropica::io {

using nlohmann::json;

inline constexpr const char* kSchema = "tropica/1";

// wraps nlohmann parse errors into ErrorKind::Parse and validates the
// optional top-level "schema" marker
json parse_document(const std::string& text);

UniPoly parse_unipoly(const json& j);
json unipoly_json(const UniPoly& p);

BiPoly parse_bipoly(const json& j);
json bipoly_json(const BiPoly& p);

json rootlist_json(const RootList& roots);  // bare array
RootList parse_rootlist(const json& j);
json factorization_json(const Factorization& f);

TropicalCurve parse_curve(const json& j);
json curve_json(const TropicalCurve& c);

DualSubdivision parse_subdivision(const json& j);
json subdivision_json(const DualSubdivision& s);

json intersection_points_json(const std::vector<IntersectionPoint>& pts);
json intersection_report_json(const std::vector<IntersectionPoint>& pts);
json bezout_json(const BezoutReport& rep);

SurvivorSet parse_survivors(const json& j, size_t total_edges);  // bare array
json survivors_json(const SurvivorSet& s);
json patchwork_validation_json(const PatchworkValidation& v);
json enumeration_json(const std::vector<SurvivorSet>& sets, bool truncated);
json arrangement_stats_json(const ArrangementStats& st);

CoefficientFamily parse_family(const json& j);
json family_json(const CoefficientFamily& f);
GridSpec parse_grid(const json& j);
json grid_json(const GridSpec& g);
AmoebaSample parse_sample(const json& j);
json sample_json(const AmoebaSample& s);
json convergence_json(const ConvergenceReport& r);

json dequant_json(const DequantResult& r, int digits);
json degree_json(const DegreeReport& rep);
json balance_json(const BalanceReport& rep);

json error_json(const Error& e);

std::string dump(const json& j);  // stable formatting for all outputs

}  // namespace tropica::io
