#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cobk/cli.hpp"
#include "cobk/config.hpp"
#include "cobk/expression.hpp"
#include "cobk/relations.hpp"
#include "json.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace cobk;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "cobk");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args, int expected_code = 0) {
  Run r = run(args);
  CHECK(r.code == expected_code);
  return json::parse(r.out);
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p.string();
}

}  // namespace

TEST_CASE("expression round trip") {
  std::mt19937_64 rng(12);
  for (const auto& g : {Coefficients(FGAbelianGroup::cyclic(2)), Coefficients(FGAbelianGroup(1, {Integer(2)})),
                        Coefficients(FGAbelianGroup(0, {Integer(2), Integer(6)}))}) {
    for (int i = 0; i < 200; ++i) {
      FormalSum s = oracle::random_sum(g, rng);
      std::string text = s.to_string();
      CHECK(parse_formal_sum(text, g) == s);
      CHECK(parse_formal_sum(text, g).to_string() == text);
    }
  }
}

TEST_CASE("expression syntax") {
  Coefficients g(FGAbelianGroup(1, {Integer(4)}));
  CHECK(parse_group_element("e", g).is_zero());
  CHECK(parse_group_element("g1 + 2*g2", g) == GroupElement(g.group(), {Integer(1), Integer(2)}));
  CHECK(parse_group_element("[3,5] - g2", g) == GroupElement(g.group(), {Integer(3), Integer(0)}));
  CHECK(parse_formal_sum("0", g).empty());
  CHECK(parse_formal_sum("F(1/8,1/3) - F(1/8,1/3)", g).empty());
  CHECK(parse_formal_sum("2*F(0,1/2){lx=g2}", g) == Integer(2) * FormalSum(make_fiber(0, Rational(1, 2), g.generator(1), g.zero())));
  CHECK(parse_formal_sum("Lx(theta=1/4)", g) == FormalSum(make_lift_x(1, CircleValue(1, 4), g.zero(), g.zero())));
  CHECK(parse_formal_sum("Gamma(m=1,n=2,l=1,theta=1/3,s=-1)", g) ==
        -FormalSum(make_section(SectionClass(1, 2, 1, CircleValue(1, 3)), g.zero(), g.zero())));
  auto t2 = parse_t2_sum("H(0) - 2*V(1/3){g=g1}", g);
  REQUIRE(t2.size() == 3);
  CHECK(to_string(t2) == "H(0) - V(1/3){g=[1,0]} - V(1/3){g=[1,0]}");
}

TEST_CASE("parse errors carry positions") {
  Coefficients g(FGAbelianGroup::cyclic(2));
  try {
    parse_formal_sum("F(0,1/2) + Q(1)", g);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 11);
  }
  CHECK_CODE(parse_formal_sum("F(0,1/2", g), ParseError);
  CHECK_CODE(parse_formal_sum("Gamma(m=1,s=2)", g), ParseError);
  CHECK_CODE(parse_formal_sum("Ly[1/3:1]", g), NotInGeneratorSet);
  CHECK_CODE(parse_formal_sum("Lx(m=0){nu=g1}", g), ParseError);
  CHECK_CODE(parse_group_element("g3", g), ParseError);
}

TEST_CASE("normal-form command") {
  json j = run_json({"normal-form", "Gamma(m=0,n=0,l=0,theta=0)"});
  CHECK(j["command"] == "normal-form");
  CHECK(j["exact"] == true);
  CHECK(j["result"]["c"] == json::array({0, 1, 0, 0, 0}));
  CHECK(j["result"]["g2"] == "e");
  CHECK(j["result"]["a"] == json::array({"0", "e"}));
  CHECK(j["result"]["a'"] == json::array({"0", "e"}));
  json f = run_json({"normal-form", "F(1/8,1/2) - F(0,1/2)"});
  CHECK(f["result"]["a"] == json::array({"1/4", "e"}));
}

TEST_CASE("cobordant and t2 commands") {
  CHECK(run_json({"cobordant", "F(0,1/2)", "F(0,1/2)"})["result"]["cobordant"] == true);
  CHECK(run_json({"cobordant", "F(0,1/2)", "F(1/8,1/2)"})["result"]["cobordant"] == false);
  json t = run_json({"t2", "normal-form", "H(0) - H(1/3)"});
  CHECK(t["result"]["homology"] == json::array({0, 0}));
  CHECK(t["result"]["flux"] == "1/3");
}

TEST_CASE("relations, homology, mirror, roitman and chern commands") {
  json r = run_json({"relations", "check"});
  REQUIRE(r["result"].size() == 6);
  for (const auto& item : r["result"]) CHECK(item["status"] == "vanishes");
  json h = run_json({"homology"});
  CHECK(h["result"]["H2"] == "Z^4 + Z/2");
  json m = run_json({"mirror", "verify", "--combinations", "10"});
  CHECK(m["result"]["mismatches"].empty());
  json rt = run_json({"roitman", "check", "--trials", "50"});
  CHECK(rt["result"]["bound_holds"] == 50);
  json c = run_json({"chow", "chern", "0", "0,0,0,0", "-1"});
  CHECK(c["result"]["ch2"]["degree"] == 1);
}

TEST_CASE("exit codes") {
  CHECK(run({"normal-form", "F(0,"}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"normal-form", "F(0,0)"}).code == 0);
  Run bad = run({"normal-form", "Gamma(m=1)", "--config", "/nonexistent/config.json"});
  CHECK(bad.code == 1);
  json err = run_json({"normal-form", "F(0,"}, 2);
  CHECK(err["error"]["code"] == "ParseError");
  CHECK(err["error"]["position"] == 4);
  json mirror_err = run_json({"mirror", "verify", "--config", temp_file("cobk_z2z2.json", R"({"group":{"torsion":[2,2]}})")}, 1);
  CHECK(mirror_err["error"]["code"] == "UnsupportedCoefficients");
}

TEST_CASE("output is deterministic") {
  std::string cfg = temp_file("cobk_det.json", R"({"group":{"free_rank":1,"torsion":[2]},"seed":5})");
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"mirror", "verify", "--combinations", "15", "--config", cfg},
           {"roitman", "check", "--trials", "40", "--seed", "3"},
           {"normal-form", "Gamma(m=2,n=1,l=1,theta=1/3){eta=g1+g2}", "--config", cfg}}) {
    Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("configuration documents") {
  Config c = parse_config(R"({
    "group": {"free_rank": 1, "torsion": [2]},
    "half_class": {"circle": "1/2", "group": [0, 1]},
    "intersections": {"D1.D2": {"degree": 2, "alb": {"circle": "1/3"}}, "D1.D5": 3},
    "seed": 9})");
  CHECK(c.free_rank == 1);
  CHECK(c.seed == 9);
  Coefficients g = c.coefficients();
  CHECK(g.group() == FGAbelianGroup(1, {Integer(2)}));
  IntersectionTable t = c.table(g);
  CHECK(t.half_class() == EPoint{CircleValue(1, 2), g.generator(1)});
  CHECK(t.product(DivisorGenerator::D1, DivisorGenerator::D2) == ZeroCycle{2, {CircleValue(1, 3), g.zero()}});
  Config d = parse_config("{}");
  CHECK(d.coefficients().group() == FGAbelianGroup::cyclic(2));
  CHECK_CODE(parse_config("{\"group\": 3}"), InvalidArgument);
  CHECK_CODE(parse_config("not json"), InvalidArgument);
  CHECK_CODE(parse_config(R"({"intersections": {"D1.D9": 1}})"), InvalidArgument);
}

TEST_CASE("relation report") {
  for (const auto& r : check_relations(Coefficients(FGAbelianGroup::cyclic(4)))) {
    CHECK(r.instances > 0);
    CHECK_MESSAGE(r.vanishes(), r.name);
  }
}
