#include "miquel/instance.hpp"

#include <cmath>

#include <json.hpp>

namespace miquel {

using json = nlohmann::ordered_json;

namespace {

Rational field(const json& obj, const char* section, const char* key) {
  const std::string where = std::string(section) + "." + key;
  if (!obj.contains(key)) throw Error(ErrorKind::ParseError, "missing field " + where);
  const json& v = obj.at(key);
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorKind::ParseError, where + ": " + e.what());
    }
  }
  throw Error(ErrorKind::ParseError, where + " must be a rational string or an integer");
}

const json& section(const json& doc, const char* name) {
  if (!doc.contains(name) || !doc.at(name).is_object()) {
    throw Error(ErrorKind::ParseError, std::string("missing object ") + name);
  }
  return doc.at(name);
}

json exact(const ArealPoint<Rational>& p) {
  const auto n = normalized(p);
  return json::array({n.x.to_string(), n.y.to_string(), n.z.to_string()});
}

json point(const ArealPoint<Rational>& p, const TriangleMetric<Rational>& m) {
  json j = {{"exact", exact(p)}};
  try {
    const Vec2 v = cartesian_embed(p, m);
    j["cartesian"] = json::array({v.x, v.y});
  } catch (const Error&) {
    j["cartesian"] = nullptr;  // at infinity
  }
  return j;
}

json circle(const Circle<Rational>& c, const TriangleMetric<Rational>& m) {
  const Circle<Rational> n = canonical(c);
  const CircleGeometry g = circle_geometry(n);
  return {{"u", n.u.to_string()},
          {"v", n.v.to_string()},
          {"w", n.w.to_string()},
          {"center", point(g.center, m)},
          {"radius2", g.radius2.to_string()},
          {"radius", std::sqrt(std::max(0.0, g.radius2.to_double()))}};
}

json checks(const std::vector<CheckResult>& list) {
  json out = json::array();
  for (const auto& c : list) {
    json j = {{"name", c.name}, {"passed", c.passed}};
    if (!c.witness.empty()) j["witness"] = c.witness;
    out.push_back(j);
  }
  return out;
}

}  // namespace

CevianConfig<Rational> parse_instance(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("instance is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "instance must be a JSON object");
  const json& tri = section(doc, "triangle");
  const json& cev = section(doc, "cevian");
  const TriangleMetric<Rational> metric{field(tri, "triangle", "a2"), field(tri, "triangle", "b2"),
                                        field(tri, "triangle", "c2")};
  const ArealPoint<Rational> p{field(cev, "cevian", "l"), field(cev, "cevian", "m"), field(cev, "cevian", "n")};
  return CevianConfig<Rational>(metric, p);
}

std::string instance_json(const CevianConfig<Rational>& cfg) {
  const json doc = {
      {"triangle", {{"a2", cfg.a2().to_string()}, {"b2", cfg.b2().to_string()}, {"c2", cfg.c2().to_string()}}},
      {"cevian", {{"l", cfg.l().to_string()}, {"m", cfg.m().to_string()}, {"n", cfg.n().to_string()}}}};
  return doc.dump(2) + "\n";
}

std::string figure_json(const MiquelFigure& f, const std::string& degeneracy) {
  const auto& m = f.metric;
  auto done = [&](FigureStage s) { return f.stage >= s; };
  json points = json::object();
  json circles = json::object();
  if (done(FigureStage::Feet)) {
    points["A"] = point(vertex_a<Rational>(), m);
    points["B"] = point(vertex_b<Rational>(), m);
    points["C"] = point(vertex_c<Rational>(), m);
    points["P"] = point(f.p, m);
    points["L"] = point(f.feet.l, m);
    points["M"] = point(f.feet.m, m);
    points["N"] = point(f.feet.n, m);
  }
  if (done(FigureStage::MiquelCircles)) {
    circles["AMN"] = circle(f.miquel_circles[0], m);
    circles["BNL"] = circle(f.miquel_circles[1], m);
    circles["CLM"] = circle(f.miquel_circles[2], m);
  }
  if (done(FigureStage::MiquelPoint)) points["Q"] = point(f.q, m);
  if (done(FigureStage::Uvw)) {
    points["U"] = point(f.uvw[0], m);
    points["V"] = point(f.uvw[1], m);
    points["W"] = point(f.uvw[2], m);
  }
  if (done(FigureStage::UvwCircle)) circles["UVW"] = circle(f.uvw_circle, m);
  if (done(FigureStage::QCircles)) {
    circles["AQL"] = circle(f.q_circles[0], m);
    circles["BQM"] = circle(f.q_circles[1], m);
    circles["CQN"] = circle(f.q_circles[2], m);
  }
  if (done(FigureStage::Centers)) {
    points["center_AQL"] = point(f.centers[0], m);
    points["center_BQM"] = point(f.centers[1], m);
    points["center_CQN"] = point(f.centers[2], m);
  }
  if (done(FigureStage::Complete)) points["R"] = point(f.r, m);

  json doc = {{"triangle", {{"a2", m.a2.to_string()}, {"b2", m.b2.to_string()}, {"c2", m.c2.to_string()}}},
              {"points", points},
              {"circles", circles}};
  if (done(FigureStage::Complete)) doc["r_tangent"] = f.r_tangent;
  if (!degeneracy.empty()) doc["degeneracy"] = degeneracy;
  doc["checks"] = checks(f.checks);
  doc["audits"] = checks(f.audits);
  return doc.dump(2) + "\n";
}

}  // namespace miquel
