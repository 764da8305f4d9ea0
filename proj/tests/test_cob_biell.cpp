#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <functional>
#include <random>

#include "cobk/cob_biell.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace cobk;

namespace {

const Coefficients kZ2(FGAbelianGroup::cyclic(2));

template <class T>
std::size_t count_of(const FormalSum& s) {
  std::size_t n = 0;
  for (const auto& t : s.terms()) n += std::holds_alternative<T>(t.brane) ? 1 : 0;
  return n;
}

Section plain(long m, long n, int l, const Rational& th, const Coefficients& g) {
  return make_section(SectionClass(m, n, l, CircleValue(th)), g.zero(), g.zero());
}

// All assignments of G-elements to the first k - 1 copies; the last copy balances.
void for_each_distribution(const Coefficients& g, const std::vector<int>& signs, const GroupElement& eta,
                           const std::function<void(const std::vector<GroupElement>&)>& visit) {
  std::vector<GroupElement> all;
  Integer order = g.group().cardinality();
  for (long i = 0; i < order.get_si(); ++i) all.push_back(Integer(i) * g.generator(0));
  std::vector<std::size_t> idx(signs.empty() ? 0 : signs.size() - 1, 0);
  while (true) {
    std::vector<GroupElement> nus;
    GroupElement rest = eta;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      nus.push_back(all[idx[i]]);
      rest -= Integer(signs[i]) * nus.back();
    }
    if (!signs.empty()) nus.push_back(Integer(signs.back()) * rest);
    visit(nus);
    std::size_t p = 0;
    while (p < idx.size() && ++idx[p] == all.size()) idx[p++] = 0;
    if (p == idx.size()) break;
  }
}

}  // namespace

TEST_CASE("refined cycle class") {
  const GroupElement e = kZ2.zero();
  CHECK(cyc(FormalSum(zero_section(kZ2, e))) == H2Class(0, 1, 0, 0, 0));
  FormalSum d = FormalSum(make_fiber(Rational(1, 8), Rational(1, 3), e, e)) -
                FormalSum(make_fiber(Rational(1, 5), Rational(2, 3), e, e));
  CHECK(cyc(d).is_zero());
  Section neg = make_section(SectionClass(2, 3, 1, CircleValue(1, 5)), e, e, -1);
  CHECK(cyc(FormalSum(neg)) == H2Class(-6, -1, -2, -3, 1));
  for (long m = -3; m <= 3; ++m)
    for (long n = -3; n <= 3; ++n)
      for (int l = 0; l <= 1; ++l) {
        SectionClass c(m, n, l, CircleValue(1, 4));
        FormalSum s(make_section(c, e, e));
        CHECK(cyc(s) == class_of_section(c));
        CHECK(cyc(surgery_decompose(std::get<Section>(s.terms()[0].brane), kZ2)) == class_of_section(c));
      }
}

TEST_CASE("two-torsion invariant") {
  const GroupElement e = kZ2.zero(), g = kZ2.generator(0);
  SectionClass f10(1, 0, 0, CircleValue());
  FormalSum d = FormalSum(make_section(f10, e, g)) - FormalSum(make_section(f10, e, e));
  CHECK(psi(d, kZ2) == g);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    FormalSum s;
    s.add(make_fiber(oracle::random_rational(rng), oracle::random_rational(rng), e, e), long(rng() % 5) - 2);
    s.add(make_section(SectionClass(long(rng() % 5) - 2, long(rng() % 5) - 2, int(rng() % 2), CircleValue()), e, e), 1);
    s.add(make_lift_y(long(rng() % 5) - 2, int(rng() % 2), e), 1);
    CHECK(psi(s, kZ2).is_zero());
  }
  LiftY y{{{CircleValue(1, 2), 3, g}, {CircleValue(), 1, g}}};
  CHECK(psi(FormalSum(y), kZ2).is_zero());
  LiftY y1{{{CircleValue(1, 2), 3, g}}};
  CHECK(psi(FormalSum(y1), kZ2) == g);
}

TEST_CASE("surgery decomposition") {
  const GroupElement e = kZ2.zero();
  FormalSum z = surgery_decompose(plain(0, 0, 0, 0, kZ2), kZ2);
  CHECK(z == FormalSum(zero_section(kZ2, e)));
  FormalSum s = surgery_decompose(plain(1, 1, 0, 0, kZ2), kZ2);
  CHECK(count_of<Fiber>(s) == 1);
  CHECK(count_of<LiftX>(s) == 1);
  CHECK(count_of<LiftY>(s) == 1);
  CHECK(count_of<Section>(s) == 1);
  CHECK(s == oracle::section_rhs(1, 1, 0, 0, {e}, e, e, kZ2));
  for (long m = -3; m <= 3; ++m)
    for (long n = -3; n <= 3; ++n)
      for (int l = 0; l <= 1; ++l)
        for (const auto& th : {Rational(0), Rational(1, 3)}) {
          auto signs = surgery_copy_signs(SectionClass(m, n, l, CircleValue(th)));
          CHECK(signs == oracle::unit_signs(m, th));
          std::vector<GroupElement> nus(signs.size(), e);
          CHECK(surgery_decompose(plain(m, n, l, th, kZ2), nus, kZ2) ==
                oracle::section_rhs(m, n, l, th, nus, e, e, kZ2));
        }
  CHECK_CODE(surgery_decompose(make_section(SectionClass(1, 0, 0, CircleValue()), kZ2.generator(0), e), {e}, kZ2),
             InvalidDistribution);
}

TEST_CASE("distribution independence over cyclic coefficients") {
  std::size_t checked = 0;
  for (long order = 2; order <= 6; ++order) {
    Coefficients g(FGAbelianGroup::cyclic(order));
    for (long m = -3; m <= 3; ++m)
      for (long n = 0; n <= 1; ++n)
        for (const auto& th : {Rational(0), Rational(1, 3)})
          for (const auto& eta : {g.zero(), g.generator(0)}) {
            SectionClass c(m, n, 1, CircleValue(th));
            Section s = make_section(c, eta, g.zero());
            auto signs = surgery_copy_signs(c);
            if (signs.empty()) continue;
            InvariantTuple ref = normal_form(surgery_decompose(s, g), g);
            CHECK(ref == normal_form(FormalSum(s), g));
            for_each_distribution(g, signs, eta, [&](const std::vector<GroupElement>& nus) {
              ++checked;
              CHECK(normal_form(surgery_decompose(s, nus, g), g) == ref);
            });
          }
  }
  CHECK(checked > 1000);
}

TEST_CASE("fiber reduction") {
  const Coefficients g(FGAbelianGroup::cyclic(4));
  const GroupElement a = g.generator(0), b = Integer(2) * g.generator(0);
  Fiber r = fiber_reduce(make_fiber(Rational(1, 4), Rational(1, 3), a, b));
  CHECK(r.x == Rational(1, 4));
  CHECK(r.y == Rational(1, 2));
  CHECK(r.lx == a);
  CHECK(r.ly.is_zero());
  Fiber on = fiber_reduce(make_fiber(Rational(1, 8), Rational(1, 2), a, a));
  CHECK(on.x == Rational(1, 8));
  CHECK(on.y == Rational(1, 2));
  CHECK(on.lx == a);
  CHECK(on.ly.is_zero());
  FormalSum t;
  t.add(Fiber{Rational(1, 8), Rational(1, 5), a, a}, 2);
  t.add(Fiber{Rational(1, 8), Rational(-1, 5), a, -a}, -2);
  CHECK(normal_form(t, g).is_zero());
}

TEST_CASE("Albanese coordinates") {
  const Coefficients g(FGAbelianGroup::cyclic(4));
  const GroupElement e = g.zero(), a = g.generator(0), b = Integer(3) * g.generator(0);
  FormalSum d = FormalSum(make_fiber(Rational(1, 4), Rational(1, 2), e, e)) -
                FormalSum(make_fiber(0, Rational(1, 2), e, e));
  CHECK(alb_loc(d, g) == AlbValue{CircleValue(1, 2), e});
  CHECK(alb_prime_loc(d, g).is_zero());
  FormalSum lx = FormalSum(make_lift_x(1, CircleValue(1, 4), e, e)) - FormalSum(make_lift_x(1, CircleValue(), e, e));
  CHECK(alb_loc(lx, g).is_zero());
  Rational moved = 0;
  for (const auto& bend : oracle::x_bends(1, Rational(1, 4))) moved += bend.position * bend.weight;
  for (const auto& bend : oracle::x_bends(1, 0)) moved -= bend.position * bend.weight;
  CHECK(alb_prime_loc(lx, g) == AlbValue{CircleValue(moved), e});
  FormalSum loc = FormalSum(make_fiber(Rational(1, 6), Rational(1, 2), a, e)) -
                  FormalSum(make_fiber(Rational(1, 6), Rational(1, 2), b, e));
  CHECK(alb_loc(loc, g) == AlbValue{CircleValue(), a - b});
  FormalSum same = FormalSum(make_lift_x(2, CircleValue(1, 3), a, e)) - FormalSum(make_lift_x(2, CircleValue(1, 3), a, e));
  CHECK(alb_prime_loc(same, g).is_zero());
  CHECK_CODE(alb_loc(FormalSum(make_fiber(0, 0, e, e)), g), NotInKernel);
  CHECK_CODE(alb_prime_loc(FormalSum(make_lift_y(2, 0, e)), g), NotInKernel);
}

TEST_CASE("splitting section") {
  const GroupElement e = kZ2.zero();
  CHECK(splitting_section(H2Class(0, 1, 0, 0, 0), e, kZ2) == FormalSum(zero_section(kZ2, e)));
  CHECK(splitting_section(H2Class(1, 0, 0, 0, 0), e, kZ2) == FormalSum(make_fiber(0, Rational(1, 2), e, e)));
  for (long a = -2; a <= 2; ++a)
    for (long m = -2; m <= 2; ++m)
      for (int l = 0; l <= 1; ++l)
        for (const auto& g2 : kZ2.two_torsion_elements()) {
          H2Class c(a, 1 - a, m, -m, l);
          InvariantTuple t = normal_form(splitting_section(c, g2, kZ2), kZ2);
          CHECK(t.c == c);
          CHECK(t.g2 == g2);
          CHECK(t.a.is_zero());
          CHECK(t.a_prime.is_zero());
        }
}

TEST_CASE("normal form examples") {
  const GroupElement e = kZ2.zero();
  InvariantTuple z = normal_form(FormalSum(zero_section(kZ2, e)), kZ2);
  CHECK(z.c == H2Class(0, 1, 0, 0, 0));
  CHECK(z.g2.is_zero());
  CHECK(z.a.is_zero());
  CHECK(z.a_prime.is_zero());
  Fiber f = make_fiber(Rational(1, 7), Rational(2, 7), kZ2.generator(0), e);
  CHECK(normal_form(FormalSum(f) - FormalSum(f), kZ2) == zero_tuple(kZ2));
  const Coefficients g(FGAbelianGroup(1, {Integer(2)}));
  Section s = make_section(SectionClass(2, 1, 1, CircleValue(1, 3)), g.generator(0) + g.generator(1), g.zero());
  InvariantTuple t = normal_form(FormalSum(s), g);
  CHECK(t.to_string() == normal_form(realize(t, g), g).to_string());
  CHECK(t.c == H2Class(2, 1, 2, 1, 1));
}

TEST_CASE("grading parity") {
  std::mt19937_64 rng(9);
  const Coefficients g(FGAbelianGroup(1, {Integer(2)}));
  for (int i = 0; i < 40; ++i) {
    SectionClass c(long(rng() % 7) - 3, long(rng() % 7) - 3, int(rng() % 2), CircleValue(oracle::random_rational(rng)));
    GroupElement eta = oracle::random_element(g, rng);
    FormalSum pos(make_section(c, eta, g.zero(), 1));
    FormalSum neg(make_section(c, eta, g.zero(), -1));
    CHECK(normal_form(Integer(2) * pos, g) == normal_form(pos - neg, g));
    CHECK(normal_form(pos + neg, g).is_zero());
  }
}

TEST_CASE("normal form is additive") {
  std::mt19937_64 rng(10);
  const Coefficients g(FGAbelianGroup(1, {Integer(4)}));
  for (int i = 0; i < 100; ++i) {
    FormalSum x = oracle::random_sum(g, rng), y = oracle::random_sum(g, rng);
    CHECK(normal_form(x + y, g) == normal_form(x, g) + normal_form(y, g));
    CHECK(normal_form(x - x, g).is_zero());
  }
}

TEST_CASE("cobordism decision") {
  const GroupElement e = kZ2.zero();
  FormalSum a(make_fiber(0, Rational(1, 2), e, e));
  CHECK(is_cobordant(a, a, kZ2));
  CHECK(is_cobordant(FormalSum(make_fiber(Rational(1, 8), Rational(1, 9), e, e)),
                     FormalSum(make_fiber(Rational(1, 8), Rational(1, 2), e, e)), kZ2));
  CHECK_FALSE(is_cobordant(a, FormalSum(make_fiber(Rational(1, 8), Rational(1, 2), e, e)), kZ2));
  CHECK_FALSE(is_cobordant(a, FormalSum(zero_section(kZ2, e)), kZ2));
}
