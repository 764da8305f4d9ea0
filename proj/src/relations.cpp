#include "cobk/relations.hpp"

#include "cobk/cob_biell.hpp"
#include "cobk/cob_t2.hpp"

namespace cobk {

namespace {

const std::vector<Rational>& grid4() {
  static const std::vector<Rational> v{0, Rational(1, 4), Rational(1, 3), Rational(1, 2)};
  return v;
}

void count(RelationResult& r, bool ok) {
  ++r.instances;
  if (!ok) ++r.failures;
}

}  // namespace

std::vector<RelationResult> check_relations(const Coefficients& g) {
  const GroupElement e = g.zero();
  std::vector<GroupElement> systems{e};
  for (const auto& x : g.generators()) systems.push_back(x);
  std::vector<RelationResult> out;

  RelationResult r1{"relation1T2"}, r2{"relation2T2"};
  for (const auto& a : grid4())
    for (const auto& b : grid4())
      for (const auto& th : grid4()) {
        auto h = [&](const Rational& p, int s) { return CircleBrane{Direction::Horizontal, CircleValue(p), e, s}; };
        auto v = [&](const Rational& p, int s) { return CircleBrane{Direction::Vertical, CircleValue(p), e, s}; };
        T2Class zero{0, 0, CircleValue(), e};
        count(r1, normal_form_t2({h(a, 1), h(a + th, -1), v(b, -1), v(b + th, 1)}, g.group()) == zero);
        count(r2, normal_form_t2({h(0, 1), h(th, -1), h(a, -1), h(a + th, 1)}, g.group()) == zero);
      }
  out.push_back(r1);
  out.push_back(r2);

  RelationResult rs{"cobsectionstogenerators"};
  for (int m = -3; m <= 3; ++m)
    for (int n = -3; n <= 3; ++n)
      for (int l = 0; l <= 1; ++l)
        for (const auto& th : {Rational(0), Rational(1, 4), Rational(1, 2)})
          for (const auto& eta : systems)
            for (const auto& eta2 : g.two_torsion_elements()) {
              Section s = make_section(SectionClass(m, n, l, CircleValue(th)), eta, eta2);
              auto signs = surgery_copy_signs(s.cls);
              FormalSum rhs;
              if (signs.empty()) {
                rhs = surgery_decompose(s, g);
              } else {
                std::vector<GroupElement> nus(signs.size(), e);
                nus.back() = Integer(signs.back()) * eta;
                rhs = surgery_decompose(s, nus, g);
              }
              count(rs, normal_form(FormalSum(s) - rhs, g).is_zero());
            }
  out.push_back(rs);

  RelationResult f1{"2F1"}, f4{"4F2"}, f2{"F2"};
  for (const auto& x : grid4())
    for (const auto& y : grid4())
      for (const auto& lx : systems)
        for (const auto& ly : systems) {
          FormalSum a;
          a.add(make_fiber(x / 2, y, lx, ly), 1);
          a.add(make_fiber(x / 2, -y, lx, -ly), -1);
          count(f1, normal_form(Integer(2) * a, g).is_zero());
          FormalSum b;
          b.add(make_fiber(x / 2, y, lx, ly), 1);
          b.add(make_fiber(x / 2, Rational(1, 2), lx, e), -1);
          count(f4, normal_form(Integer(4) * b, g).is_zero());
          count(f2, normal_form(b, g).is_zero());
        }
  out.push_back(f1);
  out.push_back(f4);
  out.push_back(f2);
  return out;
}

}  // namespace cobk
