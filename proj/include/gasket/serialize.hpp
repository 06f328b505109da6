#pragma once

#include <string>

#include <json.hpp>

#include "gasket/gasket.hpp"
#include "gasket/sumset.hpp"
#include "gasket/thickness.hpp"

namespace gasket::io {

using json = nlohmann::json;

// Exact scalars serialize as {"rational", "sqrt3_coeff", "float"} so
// downstream tools pick their precision; points carry both the exact basis
// pair and the derived Cartesian floats.
json to_json(const Rat& r);
json to_json(const Quad3& q);
json to_json(const Point& p);
json to_json(const MembershipWitness& w);
json to_json(const Cell& c);
json to_json(const StageSet& s);
json to_json(const geom::Disk& d);
json to_json(const thickness::Certificate& cert);
json to_json(const thickness::WitnessReport& rep);
json to_json(const thickness::ThicknessReport& rep);
json to_json(const sumset::BoundQuery& q, const sumset::BoundResult& r);
json to_json(const sumset::CoverageReport& rep);

std::string dump(const json& j);  // canonical 2-space indented form

// CSV emitters. Floats print in shortest round-trip form, exact values as
// reduced fractions; both are byte-stable across runs.
std::string scan_csv(const thickness::ThicknessReport& rep);
std::string points_csv(std::span<const Point> pts);

std::string format_double(double v);

// Flag-argument parsers. Rationals accept "p/q", integers and decimal
// strings (parsed digit-exactly, so 0.2 is 1/5).
Rat parse_rat(const std::string& text);
// Named points v1|v2|v3|m12|m13|m23 or a "u,w" basis pair of rationals.
Point parse_point(const std::string& text);
// Thickness values for bound queries: a rational/decimal or the symbolic
// token "sqrt3/6" (more generally "sqrt3/<k>" or "sqrt3*<p/q>").
double parse_thickness(const std::string& text);

}  // namespace gasket::io
