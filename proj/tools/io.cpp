#include "io.hpp"

#include "bsg/error.hpp"

#include <fstream>
#include <sstream>

namespace bsg::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

int get_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) bad(std::string("missing integer field '") + key + "'");
  return j[key].get<int>();
}

Rational get_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  bad("expected a rational as string or integer");
}

}  // namespace

Json groupoid_to_json(const Groupoid& g) {
  Json j;
  j["schema"] = kGroupoidSchema;
  Json units = Json::array();
  for (int x = 0; x < g.num_units(); ++x) units.push_back({{"id", x}, {"mass", to_string(g.mass(x))}});
  j["units"] = units;
  Json arrows = Json::array();
  for (int a = 0; a < g.num_arrows(); ++a)
    arrows.push_back({{"id", a},
                      {"source", g.source(a)},
                      {"range", g.range(a)},
                      {"inverse", g.inverse(a)},
                      {"label", g.arrow_label(a)}});
  j["arrows"] = arrows;
  Json product = Json::array();
  for (int a = 0; a < g.num_arrows(); ++a)
    for (int b : g.into(g.source(a)))
      if (auto c = g.product(a, b)) product.push_back({a, b, *c});
  j["product"] = product;
  return j;
}

Groupoid groupoid_from_json(const Json& j) {
  if (!j.is_object()) bad("groupoid document must be an object");
  if (j.contains("schema") && j["schema"] != kGroupoidSchema) bad("unsupported groupoid schema");
  if (!j.contains("units") || !j["units"].is_array()) bad("missing 'units' array");
  if (!j.contains("arrows") || !j["arrows"].is_array()) bad("missing 'arrows' array");
  std::vector<Rational> masses;
  for (std::size_t i = 0; i < j["units"].size(); ++i) {
    const Json& u = j["units"][i];
    if (get_int(u, "id") != static_cast<int>(i)) bad("unit ids must be 0..n-1 in order");
    masses.push_back(u.contains("mass") ? get_rational(u["mass"]) : Rational(1));
  }
  std::vector<Arrow> arrows;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < j["arrows"].size(); ++i) {
    const Json& a = j["arrows"][i];
    if (get_int(a, "id") != static_cast<int>(i)) bad("arrow ids must be 0..m-1 in order");
    arrows.push_back({get_int(a, "source"), get_int(a, "range"), 0, get_int(a, "inverse")});
    labels.push_back(a.contains("label") ? a["label"].get<std::string>() : std::string());
  }
  std::vector<std::array<int, 3>> product;
  if (j.contains("product")) {
    if (!j["product"].is_array()) bad("'product' must be an array of triples");
    for (const auto& t : j["product"]) {
      if (!t.is_array() || t.size() != 3) bad("'product' entries must be [g, h, gh]");
      product.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
    }
  }
  return Groupoid::from_table(std::move(masses), arrows, std::move(labels), product);
}

Target parse_target(const std::string& s) {
  if (s == "Q+" || s == "Q" || s == "rational") return Target::multiplicative();
  if (s == "Z" || s == "integers") return Target::integers();
  if (s.rfind("Z/", 0) == 0) {
    long long n = to_ll(parse_int(s.substr(2)));
    if (n < 1) bad("cyclic target needs n >= 1");
    return Target::cyclic(n);
  }
  bad("unknown target '" + s + "' (expected Q+, Z or Z/n)");
}

Json cocycle_to_json(const Cocycle& c) {
  Json j;
  j["target"] = c.target.kind == TargetKind::PositiveRational ? std::string("Q+")
                : c.target.kind == TargetKind::Integer       ? std::string("Z")
                                                             : "Z/" + std::to_string(c.target.modulus);
  Json vals = Json::object();
  for (std::size_t a = 0; a < c.values.size(); ++a) vals[std::to_string(a)] = to_string(c.values[a]);
  j["values"] = vals;
  return j;
}

Cocycle cocycle_from_json(const Json& j, int num_arrows) {
  if (!j.is_object() || !j.contains("target") || !j.contains("values")) bad("cocycle needs 'target' and 'values'");
  Cocycle c{parse_target(j["target"].get<std::string>()), std::vector<Rational>(num_arrows)};
  std::vector<char> seen(num_arrows, 0);
  const Json& v = j["values"];
  auto put = [&](int a, const Json& val) {
    if (a < 0 || a >= num_arrows) bad("cocycle value for unknown arrow " + std::to_string(a));
    c.values[a] = get_rational(val);
    if (!c.target.valid(c.values[a])) bad("value " + to_string(c.values[a]) + " not in " + c.target.str());
    seen[a] = 1;
  };
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) put(to_ll(parse_int(it.key())), it.value());
  } else if (v.is_array()) {
    for (std::size_t a = 0; a < v.size(); ++a) put(static_cast<int>(a), v[a]);
  } else {
    bad("'values' must be an object or array");
  }
  for (int a = 0; a < num_arrows; ++a)
    if (!seen[a]) bad("no cocycle value for arrow " + std::to_string(a));
  return c;
}

Json type_to_json(const TypeLabel& t) {
  switch (t.kind) {
    case TypeKind::II: return {{"type", "II"}};
    case TypeKind::IIILambda: return {{"type", "III_lambda"}, {"lambda", to_string(t.lambda)}};
    case TypeKind::III1: return {{"type", "III_1"}};
    case TypeKind::III0Flag: return {{"type", "III_0"}, {"note", "not representable at finite scale"}};
  }
  return {};
}

Json geodesic_to_json(const std::vector<TreeEdge>& path) {
  Json arr = Json::array();
  for (const auto& e : path) arr.push_back({{"edge", e.rep.str()}, {"sign", e.sign}});
  return arr;
}

Json check_to_json(const CheckResult& r) {
  Json j{{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"passed", r.passed()}};
  if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
  return j;
}

Json mackey_to_json(const MackeyRange& m) {
  return {{"target", m.target.str()}, {"components", m.num_components}, {"cycle_type", m.cycle_type()}};
}

std::vector<int> parse_id_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    out.push_back(static_cast<int>(to_ll(parse_int(tok.substr(b, tok.find_last_not_of(" \t") - b + 1)))));
  }
  return out;
}

Subgroupoid subgroupoid_from_ids(const Groupoid& g, const std::vector<int>& ids) {
  for (int a : ids)
    if (a < 0 || a >= g.num_arrows()) throw Error(ErrorKind::InvalidParams, "no arrow " + std::to_string(a));
  return generated(g, ids);
}

Json ids_to_json(const std::vector<int>& ids) { return Json(ids); }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

}  // namespace bsg::io
