#include "cobk/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "cobk/batch.hpp"
#include "cobk/config.hpp"
#include "cobk/errors.hpp"
#include "cobk/expression.hpp"
#include "cobk/homology.hpp"
#include "cobk/mirror.hpp"
#include "cobk/relations.hpp"
#include "json.hpp"

namespace cobk {

namespace {

using nlohmann::ordered_json;

ordered_json int_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

ordered_json alb_json(const AlbValue& a) { return ordered_json::array({a.circle.to_string(), a.group.to_string()}); }

ordered_json h2_json(const H2Class& c) {
  return ordered_json::array({int_json(c.a), int_json(c.b), int_json(c.m), int_json(c.n), c.l});
}

ordered_json tuple_json(const InvariantTuple& t) {
  return {{"c", h2_json(t.c)}, {"g2", t.g2.to_string()}, {"a", alb_json(t.a)}, {"a'", alb_json(t.a_prime)}};
}

ordered_json chow_json(const ChowClass& c) {
  const auto& d = c.divisor;
  return {{"ch0", int_json(c.fundamental)},
          {"ch1", {{"D1", int_json(d.d1)}, {"D2", int_json(d.d2)}, {"D3", d.d3}, {"D4", d.d4}, {"pic0", alb_json(d.pic0)}}},
          {"ch2", {{"degree", int_json(c.zero_cycle.degree)}, {"alb", alb_json(c.zero_cycle.alb)}}}};
}

// "d1,d2,d3,d4[;t;group]"
Divisor parse_divisor(const std::string& text, const Coefficients& g) {
  Divisor d = zero_divisor(g);
  std::stringstream ss(text);
  std::string head, t, grp;
  std::getline(ss, head, ';');
  std::getline(ss, t, ';');
  std::getline(ss, grp);
  std::vector<Integer> v;
  std::stringstream hs(head);
  for (std::string item; std::getline(hs, item, ',');) {
    try {
      v.push_back(Integer(item));
    } catch (const std::invalid_argument&) {
      throw ParseError(0, "bad divisor coordinate '" + item + "'");
    }
  }
  if (v.size() != 4) throw ParseError(0, "divisor needs four coordinates d1,d2,d3,d4");
  d.d1 = v[0];
  d.d2 = v[1];
  d.d3 = static_cast<int>(mod_floor(v[2], 2).get_si());
  d.d4 = static_cast<int>(mod_floor(v[3], 2).get_si());
  if (!t.empty()) d.pic0.circle = CircleValue(parse_rational(t));
  if (!grp.empty()) d.pic0.group = parse_group_element(grp, g);
  return d;
}

// "degree[;t;group]"
ZeroCycle parse_zero_cycle(const std::string& text, const Coefficients& g) {
  ZeroCycle z = zero_zero_cycle(g);
  std::stringstream ss(text);
  std::string head, t, grp;
  std::getline(ss, head, ';');
  std::getline(ss, t, ';');
  std::getline(ss, grp);
  try {
    z.degree = Integer(head);
  } catch (const std::invalid_argument&) {
    throw ParseError(0, "bad degree '" + head + "'");
  }
  if (!t.empty()) z.alb.circle = CircleValue(parse_rational(t));
  if (!grp.empty()) z.alb.group = parse_group_element(grp, g);
  return z;
}

std::string text_of(const ordered_json& j, int indent = 0) {
  std::string pad(indent, ' ');
  std::string s;
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !(v.is_array() && !v.empty() && !v.front().is_structured()))
        s += pad + k + ":\n" + text_of(v, indent + 2);
      else
        s += pad + k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    }
  } else if (j.is_array()) {
    for (const auto& v : j) s += (v.is_structured() ? text_of(v, indent) : pad + v.dump() + "\n");
  } else {
    s += pad + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
  return s;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cobordism group normal forms for a bielliptic surface and the 2-torus", "cobk"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path, output = "json";
  std::optional<std::uint64_t> seed_flag;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--seed", seed_flag, "random seed");
  app.add_option("--output", output, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::string expr_a, expr_b, c1_text = "0,0,0,0", c2_text = "0";
  std::string rank_text;
  std::size_t trials = 1000, combos = 50;

  auto* nf = app.add_subcommand("normal-form", "normal form of a brane expression");
  nf->add_option("expr", expr_a)->required();
  auto* cob = app.add_subcommand("cobordant", "decide cobordism of two expressions");
  cob->add_option("a", expr_a)->required();
  cob->add_option("b", expr_b)->required();
  auto* hom = app.add_subcommand("homology", "twisted homology groups");
  auto* t2 = app.add_subcommand("t2", "the 2-torus");
  t2->require_subcommand(1);
  auto* t2nf = t2->add_subcommand("normal-form", "normal form of a circle sum");
  t2nf->add_option("expr", expr_a)->required();
  auto* chow = app.add_subcommand("chow", "mirror Chow ring");
  chow->require_subcommand(1);
  auto* chern_cmd = chow->add_subcommand("chern", "integral Chern character");
  chern_cmd->add_option("rk", rank_text)->required();
  chern_cmd->add_option("c1", c1_text, "d1,d2,d3,d4[;t;group]")->required();
  chern_cmd->add_option("c2", c2_text, "degree[;t;group]")->required();
  auto* mirror = app.add_subcommand("mirror", "mirror comparison");
  mirror->require_subcommand(1);
  auto* verify = mirror->add_subcommand("verify", "compare both sides on generators and random sums");
  verify->add_option("--combinations", combos, "random combinations");
  auto* rel = app.add_subcommand("relations", "relation suite");
  rel->require_subcommand(1);
  auto* relcheck = rel->add_subcommand("check", "evaluate every relation");
  auto* roit = app.add_subcommand("roitman", "isotropic dimension bound");
  roit->require_subcommand(1);
  auto* roitcheck = roit->add_subcommand("check", "random isotropic subspaces");
  roitcheck->add_option("--trials", trials, "number of trials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  std::string command;
  ordered_json result;
  auto emit_error = [&](const std::string& code, const std::string& msg, std::optional<std::size_t> pos) {
    ordered_json j{{"command", command}, {"error", {{"code", code}, {"message", msg}}}, {"exact", true}};
    if (pos) j["error"]["position"] = *pos;
    if (output == "json")
      out << j.dump(2) << "\n";
    else
      err << code << ": " << msg << "\n";
  };

  try {
    Config cfg = config_path.empty() ? Config{} : load_config(config_path);
    std::uint64_t seed = seed_flag ? *seed_flag : cfg.seed;
    Coefficients g = cfg.coefficients();

    if (nf->parsed()) {
      command = "normal-form";
      FormalSum s = parse_formal_sum(expr_a, g);
      result = tuple_json(normal_form(s, g));
      result["input"] = s.to_string();
    } else if (cob->parsed()) {
      command = "cobordant";
      FormalSum a = parse_formal_sum(expr_a, g), b = parse_formal_sum(expr_b, g);
      InvariantTuple ta = normal_form(a, g), tb = normal_form(b, g);
      result = {{"cobordant", ta == tb}, {"a", tuple_json(ta)}, {"b", tuple_json(tb)}};
    } else if (hom->parsed()) {
      command = "homology";
      TwistedH2 h2 = compute_h2_twisted();
      H3TwoTorsion h3 = h3_two_torsion();
      result = {{"H2", h2.group.to_string()},
                {"generators", h2.generators},
                {"kernel_term", h2.kernel_term.to_string()},
                {"quotient_term", h2.quotient_term.to_string()},
                {"H3_two_torsion", h3.group.to_string()},
                {"H3_representative", h3.representative}};
    } else if (t2nf->parsed()) {
      command = "t2 normal-form";
      auto sum = parse_t2_sum(expr_a, g);
      T2Class c = normal_form_t2(sum, g.group());
      result = {{"homology", ordered_json::array({int_json(c.hx), int_json(c.hy)})},
                {"flux", c.flux.to_string()},
                {"monodromy", c.monodromy.to_string()}};
    } else if (chern_cmd->parsed()) {
      command = "chow chern";
      Integer rk;
      try {
        rk = Integer(rank_text);
      } catch (const std::invalid_argument&) {
        throw ParseError(0, "bad rank '" + rank_text + "'");
      }
      IntersectionTable table = cfg.table(g);
      QuasilinearMap h = bielliptic_quasilinear(table);
      result = chow_json(chern(rk, parse_divisor(c1_text, g), parse_zero_cycle(c2_text, g), h));
    } else if (verify->parsed()) {
      command = "mirror verify";
      IntersectionTable table = cfg.table(g);
      auto grid = generating_set(g);
      auto random = random_combinations(g, combos, seed);
      MirrorReport r1 = verify_isomorphism(grid, table), r2 = verify_isomorphism(random, table);
      ordered_json mism = ordered_json::array();
      for (const auto* r : {&r1, &r2})
        for (const auto& m : r->mismatches)
          mism.push_back({{"input", m.input}, {"mirror", chow_json(m.mirror_side)}, {"tropical", chow_json(m.tropical_side)}});
      result = {{"generators_checked", r1.checked}, {"random_checked", r2.checked}, {"mismatches", mism}};
    } else if (relcheck->parsed()) {
      command = "relations check";
      ordered_json list = ordered_json::array();
      for (const auto& r : check_relations(g))
        list.push_back({{"relation", r.name}, {"instances", r.instances}, {"status", r.vanishes() ? "vanishes" : "fails"}});
      result = list;
    } else if (roitcheck->parsed()) {
      command = "roitman check";
      auto runs = roitman_trials(seed, trials, true);
      std::size_t holds = 0, tight = 0, planes = 0;
      for (const auto& t : runs) {
        holds += t.holds;
        if (t.symplectic_planes) {
          ++planes;
          tight += t.dim_w + t.blocks == t.dim_v;
        }
      }
      result = {{"trials", trials}, {"bound_holds", holds}, {"symplectic_plane_trials", planes},
                {"tight", tight}};
    }
  } catch (const ParseError& e) {
    emit_error(code_name(e.code()), e.what(), e.position());
    return 2;
  } catch (const Error& e) {
    emit_error(code_name(e.code()), e.what(), std::nullopt);
    return 1;
  }

  ordered_json doc{{"command", command}, {"result", result}, {"exact", true}};
  if (output == "json")
    out << doc.dump(2) << "\n";
  else
    out << text_of(result);
  return 0;
}

}  // namespace cobk
