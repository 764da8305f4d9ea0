#include "cobk/cob_biell.hpp"

#include "cobk/errors.hpp"

namespace cobk {

std::string InvariantTuple::to_string() const {
  return "(" + c.to_string() + "," + g2.to_string() + "," + a.to_string() + "," + a_prime.to_string() + ")";
}

InvariantTuple zero_tuple(const Coefficients& g) {
  return {H2Class(), g.zero(), {CircleValue(), g.zero()}, {CircleValue(), g.zero()}};
}

namespace {

H2Class brane_class(const Brane& b) {
  if (std::holds_alternative<Fiber>(b)) return class_of_fiber();
  if (auto* s = std::get_if<Section>(&b)) return class_of_section(s->cls);
  if (auto* x = std::get_if<LiftX>(&b)) {
    Integer m = 0;
    for (const auto& c : x->components) m += c.weight;
    return class_of_lift_x(m);
  }
  const auto& y = std::get<LiftY>(b);
  Integer n = 0, l = 0;
  for (const auto& c : y.components) {
    n += c.weight;
    if (c.position.is_zero()) l += c.weight;
  }
  return class_of_lift_y(n, static_cast<int>(mod_floor(l, 2).get_si()));
}

struct Copy {
  CircleValue position;
  int sign;
};

std::vector<Copy> x_copies(const SectionClass& cls) {
  std::vector<Copy> out;
  for (const auto& c : bend_locus(pl_approximation(cls).first).components) {
    int sign = c.weight > 0 ? 1 : -1;
    for (Integer i = 0; i < abs(c.weight); ++i) out.push_back({c.position, sign});
  }
  return out;
}

FormalSum decompose(const Section& s, const std::vector<Copy>& copies,
                    const std::vector<GroupElement>& nus, const GroupElement& h,
                    const Coefficients& g) {
  const GroupElement e = g.zero();
  auto y_part = pl_approximation(s.cls).second;
  auto y_comps = bend_locus(y_part, Axis::Y).components;
  FormalSum out;
  LiftX lx{{}, s.eta_z2};
  for (std::size_t i = 0; i < copies.size(); ++i) {
    lx.components.push_back({copies[i].position, copies[i].sign, nus[i]});
    for (const auto& yc : y_comps)
      out.add(make_fiber(copies[i].position.value() / 2, yc.position.value(), nus[i], e),
              Integer(copies[i].sign) * yc.weight);
  }
  out.add(lx, 1);
  LiftY ly;
  for (const auto& yc : y_comps) ly.components.push_back({yc.position, yc.weight, e});
  out.add(ly, 1);
  out.add(make_section(SectionClass(), h, s.eta_z2), 1);
  return Integer(s.parity) * out;
}

void require_kernel(const FormalSum& sum, const Coefficients& g) {
  if (!cyc(sum).is_zero() || !psi(sum, g).is_zero())
    fail(ErrorCode::NotInKernel, "refined cycle class is nonzero");
}

}  // namespace

H2Class cyc(const FormalSum& sum) {
  H2Class total;
  for (const auto& t : sum.terms()) total = total + t.coeff * brane_class(t.brane);
  return total;
}

GroupElement psi(const FormalSum& sum, const Coefficients& g) {
  GroupElement total = g.zero();
  for (const auto& t : sum.terms()) {
    if (auto* s = std::get_if<Section>(&t.brane)) {
      total += t.coeff * s->eta_z2;
    } else if (auto* y = std::get_if<LiftY>(&t.brane)) {
      for (const auto& c : y->components) total += (t.coeff * c.weight) * c.nu;
    }
  }
  return total;
}

std::vector<int> surgery_copy_signs(const SectionClass& cls) {
  std::vector<int> out;
  for (const auto& c : x_copies(cls)) out.push_back(c.sign);
  return out;
}

FormalSum surgery_decompose(const Section& s, const Coefficients& g) {
  auto copies = x_copies(s.cls);
  std::vector<GroupElement> nus(copies.size(), g.zero());
  GroupElement h = g.zero();
  if (copies.empty()) {
    h = s.eta_z;
  } else {
    std::size_t i = 0;
    while (i < copies.size() && copies[i].sign < 0) ++i;
    if (i < copies.size())
      nus[i] = s.eta_z;
    else
      nus[0] = -s.eta_z;
  }
  return decompose(s, copies, nus, h, g);
}

FormalSum surgery_decompose(const Section& s, const std::vector<GroupElement>& nus,
                            const Coefficients& g) {
  auto copies = x_copies(s.cls);
  if (nus.size() != copies.size())
    fail(ErrorCode::InvalidDistribution, "one local system per x-copy is required");
  GroupElement total = g.zero();
  for (std::size_t i = 0; i < copies.size(); ++i) total += Integer(copies[i].sign) * nus[i];
  if (!(total == s.eta_z))
    fail(ErrorCode::InvalidDistribution, "copy local systems do not multiply to eta");
  return decompose(s, copies, nus, g.zero(), g);
}

Fiber fiber_reduce(const Fiber& f) {
  return make_fiber(f.x, Rational(1, 2), f.lx, f.ly - f.ly);
}

FormalSum reduce(const FormalSum& sum, const Coefficients& g) {
  FormalSum out;
  for (const auto& t : sum.terms()) {
    if (auto* s = std::get_if<Section>(&t.brane)) {
      if (s->cls.is_zero_section())
        out.add(*s, t.coeff);
      else
        out += t.coeff * surgery_decompose(*s, g);
    } else if (auto* f = std::get_if<Fiber>(&t.brane)) {
      out.add(fiber_reduce(*f), t.coeff);
    } else {
      out.add(t.brane, t.coeff);
    }
  }
  return out;
}

AlbValue alb_loc(const FormalSum& sum, const Coefficients& g) {
  require_kernel(sum, g);
  AlbaneseData data = albanese_data(standard_klein(Lattice2()));
  Rational circle = 0;
  GroupElement group = g.zero();
  for (const auto& t : reduce(sum, g).terms()) {
    if (auto* f = std::get_if<Fiber>(&t.brane)) {
      circle += Rational(t.coeff) * (data.form[0] * f->x + data.form[1] * f->y);
      group += t.coeff * f->lx;
    }
  }
  return {CircleValue(circle / data.period), group};
}

AlbValue alb_prime_loc(const FormalSum& sum, const Coefficients& g) {
  require_kernel(sum, g);
  AlbValue total{CircleValue(), g.zero()};
  for (const auto& t : reduce(sum, g).terms()) {
    if (auto* x = std::get_if<LiftX>(&t.brane)) {
      for (const auto& c : x->components) {
        Integer k = t.coeff * c.weight;
        total.circle += k * c.position;
        total.group += k * c.nu;
      }
    } else if (auto* s = std::get_if<Section>(&t.brane)) {
      total.group += t.coeff * s->eta_z;
    }
  }
  return total;
}

FormalSum splitting_section(const H2Class& c, const GroupElement& g2, const Coefficients& g) {
  if (!g.is_two_torsion(g2)) fail(ErrorCode::InvalidArgument, "g2 must be 2-torsion");
  const GroupElement e = g.zero();
  FormalSum out;
  out.add(make_fiber(0, Rational(1, 2), e, e), c.a);
  out.add(zero_section(g, e), c.b);
  out.add(make_lift_x(1, CircleValue(), e, e), c.m);
  out.add(make_lift_y(1, 0, e), c.n);
  out.add(make_lift_y(0, 1, e), c.l);
  out.add(make_lift_y(1, 0, g2), 1);
  out.add(make_lift_y(1, 0, e), -1);
  return out;
}

InvariantTuple normal_form(const FormalSum& sum, const Coefficients& g) {
  FormalSum reduced = reduce(sum, g);
  InvariantTuple t;
  t.c = cyc(reduced);
  t.g2 = psi(reduced, g);
  FormalSum rem = reduced - reduce(splitting_section(t.c, t.g2, g), g);
  t.a = alb_loc(rem, g);
  t.a_prime = alb_prime_loc(rem, g);
  return t;
}

bool is_cobordant(const FormalSum& a, const FormalSum& b, const Coefficients& g) {
  return normal_form(a - b, g).is_zero();
}

FormalSum realize(const InvariantTuple& t, const Coefficients& g) {
  const GroupElement e = g.zero();
  FormalSum out = splitting_section(t.c, t.g2, g);
  out.add(make_fiber(t.a.circle.value() / 2, Rational(1, 2), t.a.group, e), 1);
  out.add(make_fiber(0, Rational(1, 2), e, e), -1);
  out.add(LiftX{{{CircleValue(1, 2) + t.a_prime.circle, 1, t.a_prime.group}}, e}, 1);
  out.add(make_lift_x(1, CircleValue(), e, e), -1);
  return out;
}

}  // namespace cobk
