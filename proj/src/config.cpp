#include "cobk/config.hpp"

#include <fstream>
#include <sstream>

#include "cobk/errors.hpp"
#include "json.hpp"

namespace cobk {

namespace {

using nlohmann::json;

Integer to_integer(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  fail(ErrorCode::InvalidArgument, "expected an integer, got " + j.dump());
}

Rational to_rational(const json& j) {
  if (j.is_number_integer()) return Rational(to_integer(j));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail(ErrorCode::InvalidArgument, "expected a rational \"p/q\", got " + j.dump());
}

ConfigPoint to_point(const json& j) {
  ConfigPoint p;
  if (!j.is_object()) fail(ErrorCode::InvalidArgument, "expected {\"circle\":..,\"group\":[..]}");
  if (j.contains("circle")) p.circle = to_rational(j.at("circle"));
  if (j.contains("group"))
    for (const auto& x : j.at("group")) p.group.push_back(to_integer(x));
  return p;
}

DivisorGenerator to_generator(const std::string& s) {
  static const std::map<std::string, DivisorGenerator> names{{"D1", DivisorGenerator::D1},
                                                             {"D2", DivisorGenerator::D2},
                                                             {"D3", DivisorGenerator::D3},
                                                             {"D4", DivisorGenerator::D4},
                                                             {"D5", DivisorGenerator::D5}};
  auto it = names.find(s);
  if (it == names.end()) fail(ErrorCode::InvalidArgument, "unknown divisor generator " + s);
  return it->second;
}

EPoint make_point(const ConfigPoint& p, const Coefficients& g) {
  GroupElement x = p.group.empty() ? g.zero() : g.element(p.group);
  return {CircleValue(p.circle), x};
}

}  // namespace

Coefficients Config::coefficients() const { return Coefficients(FGAbelianGroup(free_rank, torsion)); }

IntersectionTable Config::table(const Coefficients& g) const {
  IntersectionTable t = half_class ? IntersectionTable(g, make_point(*half_class, g)) : IntersectionTable(g);
  for (const auto& p : products) t.set_product(p.i, p.j, {p.degree, make_point(p.alb, g)});
  for (const auto& [i, k] : pic0_multipliers) t.set_pic0_multiplier(i, k);
  return t;
}

Config parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("config is not valid JSON: ") + e.what());
  }
  Config c;
  try {
    if (j.contains("group")) {
      const auto& grp = j.at("group");
      c.free_rank = grp.value("free_rank", 0);
      c.torsion.clear();
      if (grp.contains("torsion"))
        for (const auto& d : grp.at("torsion")) c.torsion.push_back(to_integer(d));
    }
    if (j.contains("half_class")) c.half_class = to_point(j.at("half_class"));
    if (j.contains("intersections")) {
      for (const auto& [key, value] : j.at("intersections").items()) {
        auto dot = key.find('.');
        if (dot == std::string::npos) fail(ErrorCode::InvalidArgument, "intersection keys look like \"D1.D2\"");
        DivisorGenerator a = to_generator(key.substr(0, dot)), b = to_generator(key.substr(dot + 1));
        if (a == DivisorGenerator::D5 || b == DivisorGenerator::D5) {
          if (a == DivisorGenerator::D5) std::swap(a, b);
          c.pic0_multipliers[a] = to_integer(value);
        } else {
          ConfigProduct p{a, b, 0, {}};
          if (value.contains("degree")) p.degree = to_integer(value.at("degree"));
          if (value.contains("alb")) p.alb = to_point(value.at("alb"));
          c.products.push_back(p);
        }
      }
    }
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("malformed config: ") + e.what());
  }
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot read config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace cobk
