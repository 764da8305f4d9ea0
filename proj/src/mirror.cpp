#include "cobk/mirror.hpp"

#include <random>

#include "cobk/errors.hpp"

namespace cobk {

namespace {

void require_z2(const Coefficients& g) {
  if (g.two_torsion().cardinality() != 2)
    fail(ErrorCode::UnsupportedCoefficients, "the mirror dictionary needs G_(2) = Z/2");
}

int bit(const GroupElement& x) { return x.is_zero() ? 0 : 1; }

void add_bit(int& slot, const Integer& k, int b) {
  slot = static_cast<int>(mod_floor(Integer(slot) + k * b, 2).get_si());
}

}  // namespace

K0Class mirror_class(const FormalSum& sum, const Coefficients& g) {
  require_z2(g);
  K0Class k = zero_k0(g);
  for (const auto& t : sum.terms()) {
    const Integer& c = t.coeff;
    if (auto* s = std::get_if<Section>(&t.brane)) {
      if (!s->cls.is_zero_section())
        fail(ErrorCode::NotInGeneratorSet, "only the zero section is a mirror generator");
      k.n[0] += c;
      k.p = k.p + c * AlbValue{CircleValue(), s->eta_z};
      add_bit(k.n6, c, bit(s->eta_z2));
    } else if (auto* f = std::get_if<Fiber>(&t.brane)) {
      k.n[1] += c;
      k.p_prime = k.p_prime - c * AlbValue{CircleValue(2 * f->x), f->lx};
    } else if (auto* x = std::get_if<LiftX>(&t.brane)) {
      for (const auto& comp : x->components) {
        Integer w = c * comp.weight;
        k.n[2] += w;
        k.p = k.p + w * AlbValue{comp.position - CircleValue(1, 2), comp.nu};
      }
    } else {
      for (const auto& comp : std::get<LiftY>(t.brane).components) {
        Integer w = c * comp.weight;
        k.n[3] += w;
        if (comp.position.is_zero()) add_bit(k.n5, w, 1);
        add_bit(k.n6, w, bit(comp.nu));
      }
    }
  }
  return k;
}

ChowClass tuple_to_chow(const InvariantTuple& t, const IntersectionTable& table) {
  require_z2(table.coefficients());
  ChowClass c;
  c.fundamental = t.c.b;
  c.divisor = {t.c.m, t.c.n, t.c.l, bit(t.g2), t.a_prime};
  c.zero_cycle = {t.c.a, t.a + t.c.n * table.half_class()};
  return c;
}

InvariantTuple chow_to_tuple(const ChowClass& c, const IntersectionTable& table) {
  const Coefficients& g = table.coefficients();
  require_z2(g);
  InvariantTuple t;
  t.c = H2Class(c.zero_cycle.degree, c.fundamental, c.divisor.d1, c.divisor.d2, c.divisor.d3);
  t.g2 = c.divisor.d4 ? g.two_torsion_elements().at(1) : g.zero();
  t.a_prime = c.divisor.pic0;
  t.a = c.zero_cycle.alb - c.divisor.d2 * table.half_class();
  return t;
}

MirrorReport verify_isomorphism(const std::vector<FormalSum>& grid, const IntersectionTable& table) {
  const Coefficients& g = table.coefficients();
  MirrorReport report;
  for (const auto& sum : grid) {
    ChowClass mirror = h_map(mirror_class(sum, g), table);
    ChowClass trop = tuple_to_chow(normal_form(sum, g), table);
    ++report.checked;
    if (!(mirror == trop)) report.mismatches.push_back({sum.to_string(), mirror, trop});
  }
  return report;
}

std::vector<FormalSum> generating_set(const Coefficients& g) {
  require_z2(g);
  const GroupElement e = g.zero();
  const GroupElement t = g.two_torsion_elements().at(1);
  std::vector<GroupElement> systems{e};
  for (const auto& x : g.generators()) systems.push_back(x);
  const std::vector<Rational> xs{0, Rational(1, 8), Rational(1, 3), Rational(2, 5)};
  const std::vector<Rational> ys{0, Rational(1, 4), Rational(1, 2), Rational(5, 6)};
  std::vector<FormalSum> out;
  out.emplace_back();
  for (const auto& h : systems)
    for (const auto& k : {e, t}) out.emplace_back(make_section(SectionClass(), h, k));
  for (const auto& x : xs)
    for (const auto& y : ys)
      for (const auto& lx : systems) out.emplace_back(make_fiber(x, y, lx, systems.back()));
  for (const auto& a : xs)
    for (const auto& nu : systems)
      for (int w : {1, -1}) out.emplace_back(LiftX{{{CircleValue(2 * a), w, nu}}, t});
  for (const auto& pos : {CircleValue(), CircleValue(1, 2)})
    for (const auto& nu : {e, t})
      for (int w : {1, -1}) out.emplace_back(LiftY{{{pos, w, nu}}});
  return out;
}

std::vector<FormalSum> random_combinations(const Coefficients& g, std::size_t count, std::uint64_t seed) {
  require_z2(g);
  std::mt19937_64 rng(seed);
  const GroupElement e = g.zero();
  auto two = g.two_torsion_elements();
  auto rand_int = [&](long lo, long hi) { return lo + long(rng() % std::uint64_t(hi - lo + 1)); };
  auto rand_rational = [&]() {
    long den = rand_int(1, 12);
    return make_rational(rand_int(0, den - 1), den);
  };
  auto rand_system = [&]() {
    GroupElement x = e;
    for (const auto& gen : g.generators()) x += Integer(rand_int(-3, 3)) * gen;
    return x;
  };
  std::vector<FormalSum> out;
  for (std::size_t i = 0; i < count; ++i) {
    FormalSum s;
    long terms = rand_int(1, 6);
    for (long j = 0; j < terms; ++j) {
      Integer c = rand_int(-3, 3);
      switch (rand_int(0, 3)) {
        case 0:
          s.add(make_section(SectionClass(), rand_system(), two[rng() % two.size()]), c);
          break;
        case 1:
          s.add(make_fiber(rand_rational(), rand_rational(), rand_system(), rand_system()), c);
          break;
        case 2: {
          LiftX x{{}, two[rng() % two.size()]};
          long comps = rand_int(1, 3);
          for (long k = 0; k < comps; ++k)
            x.components.push_back({CircleValue(rand_rational()), rand_int(-2, 2), rand_system()});
          s.add(x, c);
          break;
        }
        default: {
          LiftY y;
          long comps = rand_int(1, 3);
          for (long k = 0; k < comps; ++k)
            y.components.push_back({rng() % 2 ? CircleValue(1, 2) : CircleValue(), rand_int(-2, 2),
                                    two[rng() % two.size()]});
          s.add(y, c);
        }
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace cobk
