#include "gasket/serialize.hpp"

#include <charconv>
#include <cmath>

#include "gasket/errors.hpp"

namespace gasket::io {

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw InvariantError("double formatting failed");
  return std::string(buf, end);
}

json to_json(const Rat& r) { return r.str(); }

json to_json(const Quad3& q) {
  return json{{"rational", q.rational().str()},
              {"sqrt3_coeff", q.sqrt3_coeff().str()},
              {"float", q.to_double()}};
}

json to_json(const Point& p) {
  auto [x, y] = p.to_xy();
  return json{{"u", p.u.str()}, {"w", p.w.str()}, {"x", x}, {"y", y}};
}

json to_json(const MembershipWitness& w) {
  return json{{"kind", w.kind == MembershipWitness::Kind::CellVertex
                           ? "cell_vertex"
                           : "side_point"},
              {"word", w.word.str()},
              {"side", w.side_index},
              {"t", w.t.str()}};
}

json to_json(const Cell& c) {
  return json{{"word", c.word.str()},
              {"side", c.side.str()},
              {"vertices", {to_json(c.triangle.a), to_json(c.triangle.b),
                            to_json(c.triangle.c)}}};
}

json to_json(const StageSet& s) {
  json cells = json::array();
  for (const Cell& c : s.cells) cells.push_back(to_json(c));
  return json{{"level", s.level},
              {"cell_count", s.cells.size()},
              {"cells", std::move(cells)}};
}

json to_json(const geom::Disk& d) {
  json j{{"center", {{"x", d.cx}, {"y", d.cy}}},
         {"radius", d.radius},
         {"degenerate", d.degenerate},
         {"center_unique", d.center_unique}};
  if (d.exact_center) j["center"]["exact"] = to_json(*d.exact_center);
  if (d.exact_radius) j["radius_exact"] = to_json(*d.exact_radius);
  return j;
}

json to_json(const thickness::Certificate& cert) {
  json witnesses = json::array();
  for (const auto& w : cert.vertex_witnesses) witnesses.push_back(to_json(w));
  auto verts = cert.triangle.vertices();
  return json{{"x", to_json(cert.query.p)},
              {"x_witness", to_json(cert.query.witness)},
              {"r", cert.radius.str()},
              {"n", cert.scale},
              {"word", cert.word.str()},
              {"corner", cert.corner},
              {"normalized_r", cert.normalized_radius.str()},
              {"normalized_x", to_json(cert.normalized_query)},
              {"q", {to_json(verts[0]), to_json(verts[1]), to_json(verts[2])}},
              {"incircle",
               {{"center", to_json(cert.incircle_center)},
                {"radius", to_json(cert.incircle_radius)}}},
              {"witnesses", std::move(witnesses)}};
}

json to_json(const thickness::WitnessReport& rep) {
  return json{{"x", to_json(rep.witness.x)},
              {"r", rep.witness.r.str()},
              {"inradius", to_json(rep.witness.inradius)},
              {"hull_inscribed_disk", to_json(rep.hull_disk)},
              {"hull_vertices", rep.hull_vertices},
              {"symbolic_match", rep.symbolic_match}};
}

json to_json(const thickness::ThicknessReport& rep) {
  json radii = json::array();
  for (const Rat& r : rep.radii) radii.push_back(r.str());
  return json{{"exact_value", to_json(rep.exact_value)},
              {"witness_upper", to_json(rep.witness_upper)},
              {"numeric_lower", rep.numeric_lower},
              {"sample_level", rep.sample_level},
              {"query_level", rep.query_level},
              {"radii", std::move(radii)},
              {"entry_count", rep.entries.size()},
              {"degenerate_count", rep.degenerate_count}};
}

json to_json(const sumset::BoundQuery& q, const sumset::BoundResult& r) {
  return json{{"d", q.dimension},
              {"c", q.thickness},
              {"threshold", r.threshold},
              {"n_min", r.min_summands}};
}

json to_json(const sumset::CoverageReport& rep) {
  return json{{"covered", rep.covered},
              {"worst_gap", rep.worst_gap},
              {"nodes", rep.nodes},
              {"uncovered_nodes", rep.uncovered_nodes}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string scan_csv(const thickness::ThicknessReport& rep) {
  std::string out = "x_u,x_w,r,inradius,normalized,degenerate_flag\n";
  for (const auto& e : rep.entries) {
    out += e.x.u.str() + "," + e.x.w.str() + "," + e.r.str() + ",";
    out += format_double(e.inradius) + ",";
    out += format_double(e.degenerate ? 0.0 : e.inradius / e.r.to_double());
    out += e.degenerate ? ",1\n" : ",0\n";
  }
  return out;
}

std::string points_csv(std::span<const Point> pts) {
  std::string out = "u,w,x,y\n";
  for (const Point& p : pts) {
    auto [x, y] = p.to_xy();
    out += p.u.str() + "," + p.w.str() + "," + format_double(x) + "," +
           format_double(y) + "\n";
  }
  return out;
}

namespace {

std::int64_t parse_int(const std::string& s) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw DomainError("cannot parse integer: '" + s + "'");
  return v;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw DomainError("empty rational");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    return Rat(parse_int(text.substr(0, slash)),
               parse_int(text.substr(slash + 1)));
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    // Digit-exact decimal: "0.20" is 20/100 = 1/5, not the nearest double.
    std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 18)
      throw DomainError("cannot parse decimal: '" + text + "'");
    std::string whole = text.substr(0, dot);
    bool neg = !whole.empty() && whole[0] == '-';
    if (neg) whole.erase(0, 1);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rat v = Rat(whole.empty() ? 0 : parse_int(whole)) +
            Rat(parse_int(frac), den);
    return neg ? -v : v;
  }
  return Rat(parse_int(text));
}

Point parse_point(const std::string& text) {
  if (text == "v1") return vertex1();
  if (text == "v2") return vertex2();
  if (text == "v3") return vertex3();
  if (text == "m12") return midpoint(vertex1(), vertex2());
  if (text == "m13") return midpoint(vertex1(), vertex3());
  if (text == "m23") return midpoint(vertex2(), vertex3());
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw DomainError("point must be a named vertex or a 'u,w' pair: '" +
                      text + "'");
  return Point(parse_rat(text.substr(0, comma)),
               parse_rat(text.substr(comma + 1)));
}

double parse_thickness(const std::string& text) {
  if (text.rfind("sqrt3", 0) == 0) {
    std::string rest = text.substr(5);
    Rat coeff(1);
    if (!rest.empty()) {
      if (rest[0] == '/')
        coeff = Rat(1) / parse_rat(rest.substr(1));
      else if (rest[0] == '*')
        coeff = parse_rat(rest.substr(1));
      else
        throw DomainError("cannot parse thickness token: '" + text + "'");
    }
    return Quad3::sqrt3(coeff).to_double();
  }
  return parse_rat(text).to_double();
}

}  // namespace gasket::io
