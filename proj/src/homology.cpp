#include "cobk/homology.hpp"

#include "cobk/errors.hpp"

namespace cobk {

H2Class::H2Class(Integer a_, Integer b_, Integer m_, Integer n_, int l_)
    : a(std::move(a_)), b(std::move(b_)), m(std::move(m_)), n(std::move(n_)), l(((l_ % 2) + 2) % 2) {}

H2Class H2Class::operator-() const { return H2Class(-a, -b, -m, -n, l); }

H2Class operator+(const H2Class& x, const H2Class& y) {
  return H2Class(x.a + y.a, x.b + y.b, x.m + y.m, x.n + y.n, x.l + y.l);
}

H2Class operator*(const Integer& k, const H2Class& x) {
  Integer kl = mod_floor(k * x.l, 2);
  return H2Class(k * x.a, k * x.b, k * x.m, k * x.n, static_cast<int>(kl.get_si()));
}

std::string H2Class::to_string() const {
  return "(" + a.get_str() + "," + b.get_str() + "," + m.get_str() + "," + n.get_str() + "," +
         std::to_string(l) + ")";
}

// Columns: classes on the two components of V1 cap V2; rows: their images in
// U1 then U2. On the second component the gluing into U1 is twisted by the
// glide, which acts by the product of the xi sign, the action on fiber
// homology and the orientation of the component circle.

IntegerMatrix mv_inclusion_h1() {
  // per component: (s, x, y) = circle x H_0(F), point x dx, point x dy
  return IntegerMatrix{{1, 0, 0, 1, 0, 0},
                       {0, 1, 0, 0, -1, 0},
                       {0, 0, 1, 0, 0, 1},
                       {1, 0, 0, 1, 0, 0},
                       {0, 1, 0, 0, 1, 0},
                       {0, 0, 1, 0, 0, 1}};
}

IntegerMatrix mv_inclusion_h2() {
  // per component: (a, b, c) = fiber, cotangent lift, conormal lift
  return IntegerMatrix{{1, 0, 0, 1, 0, 0},
                       {0, 1, 0, 0, -1, 0},
                       {0, 0, 1, 0, 0, 1},
                       {1, 0, 0, 1, 0, 0},
                       {0, 1, 0, 0, 1, 0},
                       {0, 0, 1, 0, 0, 1}};
}

IntegerMatrix mv_inclusion_h3() {
  // per component: circle x fiber
  return IntegerMatrix{{1, -1}, {1, 1}};
}

namespace {

GroupElement vec(const FGAbelianGroup& g, std::vector<long> c) {
  std::vector<Integer> v(c.begin(), c.end());
  return GroupElement(g, v);
}

// Assemble named classes into a map from the standard group on the names.
GroupHom named_map(const FGAbelianGroup& named, const FGAbelianGroup& target,
                   const std::vector<GroupElement>& images) {
  IntegerMatrix m(target.num_generators(), images.size());
  for (std::size_t j = 0; j < images.size(); ++j)
    for (std::size_t i = 0; i < target.num_generators(); ++i) m(i, j) = images[j].coords()[i];
  GroupHom h(named, target, m);
  if (!h.is_injective() || !h.is_surjective())
    fail(ErrorCode::InternalInconsistency, "named classes do not form a basis");
  return h;
}

}  // namespace

TwistedH2 compute_h2_twisted() {
  const FGAbelianGroup z6 = FGAbelianGroup::free(6);
  GroupHom i1(z6, z6, mv_inclusion_h1());
  GroupHom i2(z6, z6, mv_inclusion_h2());

  QuotientResult quot = cokernel(i2);
  SubgroupResult ker = kernel(i1);
  DirectSum sum = direct_sum(quot.group, ker.group);

  const FGAbelianGroup expected(4, {Integer(2)});
  if (!(sum.group == expected))
    fail(ErrorCode::InternalInconsistency, "H_2 computed as " + sum.group.to_string());

  auto in_kernel = [&](const GroupElement& v) {
    auto k = preimage(ker.inclusion, v);
    if (!k) fail(ErrorCode::InternalInconsistency, "class outside the kernel");
    return *k;
  };
  GroupElement zero_section = in_kernel(vec(z6, {1, 0, 0, -1, 0, 0}));
  GroupElement lc2 = in_kernel(vec(z6, {0, 0, 1, 0, 0, -1}));

  GroupElement fiber = quot.projection(vec(z6, {1, 0, 0, 0, 0, 0}));
  GroupElement cotangent = quot.projection(vec(z6, {0, 1, 0, 0, 0, 0}));
  GroupElement conormal = quot.projection(vec(z6, {0, 0, 1, 0, 0, 0}));

  TwistedH2 h;
  h.group = sum.group;
  h.kernel_term = ker.group;
  h.quotient_term = quot.group;
  h.generators = {"fiber", "zero-section", "L_C1", "L_C2", "L_C2 - L_C3"};
  h.named_basis = named_map(expected, h.group,
                            {sum.inclusion_left(fiber), sum.inclusion_right(zero_section),
                             sum.inclusion_left(conormal), sum.inclusion_right(lc2),
                             sum.inclusion_left(cotangent)});
  return h;
}

H2Class TwistedH2::to_named(const GroupElement& x) const {
  GroupElement c = inverse(named_basis)(x);
  const auto& v = c.coords();
  return H2Class(v[0], v[1], v[2], v[3], static_cast<int>(v[4].get_si()));
}

H2Class class_of_section(const SectionClass& s) { return H2Class(s.m * s.n, 1, s.m, s.n, s.l); }
H2Class class_of_fiber() { return H2Class(1, 0, 0, 0, 0); }
H2Class class_of_lift_x(const Integer& m) { return H2Class(0, 0, m, 0, 0); }
H2Class class_of_lift_y(const Integer& n, int l) { return H2Class(0, 0, 0, n, l); }

TwistedH3 compute_h3_twisted() {
  const FGAbelianGroup z2 = FGAbelianGroup::free(2), z6 = FGAbelianGroup::free(6);
  QuotientResult quot = cokernel(GroupHom(z2, z2, mv_inclusion_h3()));
  SubgroupResult ker = kernel(GroupHom(z6, z6, mv_inclusion_h2()));
  DirectSum sum = direct_sum(quot.group, ker.group);
  const FGAbelianGroup expected(2, {Integer(2)});
  if (!(sum.group == expected))
    fail(ErrorCode::InternalInconsistency, "H_3 computed as " + sum.group.to_string());

  auto in_kernel = [&](const GroupElement& v) {
    auto k = preimage(ker.inclusion, v);
    if (!k) fail(ErrorCode::InternalInconsistency, "class outside the kernel");
    return *k;
  };
  GroupElement k_dx = in_kernel(vec(z6, {0, 0, 1, 0, 0, -1}));
  GroupElement glide_fiber = in_kernel(vec(z6, {1, 0, 0, -1, 0, 0}));
  GroupElement vertical_fiber = quot.projection(vec(z2, {1, 0}));

  TwistedH3 h;
  h.group = sum.group;
  h.generators = {"[K] x dx", "pi^-1(glide loop)", "pi^-1(C1)"};
  h.named_basis = named_map(expected, h.group,
                            {sum.inclusion_right(k_dx), sum.inclusion_right(glide_fiber),
                             sum.inclusion_left(vertical_fiber)});
  return h;
}

H3TwoTorsion h3_two_torsion() {
  TwistedH3 h3 = compute_h3_twisted();
  SubgroupResult t = n_torsion(h3.group, 2);
  if (!(t.group == FGAbelianGroup::cyclic(2)))
    fail(ErrorCode::InternalInconsistency, "2-torsion of H_3 computed as " + t.group.to_string());
  GroupElement gen = t.inclusion(GroupElement::generator(t.group, 0));
  GroupElement named = h3.named_basis(GroupElement::generator(h3.named_basis.domain(), 2));
  if (!(gen == named)) fail(ErrorCode::InternalInconsistency, "2-torsion generator mismatch");
  return {t.group, t.inclusion, gen,
          "pi^-1({x = x0}): the 3-torus over a vertical circle, x0 generic"};
}

GroupHom h3_to_h1_projection() {
  TwistedH3 h3 = compute_h3_twisted();
  const FGAbelianGroup h1(1, {Integer(2)});
  // named coordinates ([K]x dx, pi^-1(glide), pi^-1(C1)) -> (glide, vertical)
  GroupHom on_named(h3.named_basis.domain(), h1, IntegerMatrix{{0, 1, 0}, {0, 0, 1}});
  return compose(on_named, inverse(h3.named_basis));
}

MonodromyLoop h3_cycle_intersection(LagrangianSupport support) {
  switch (support) {
    case LagrangianSupport::Section: return MonodromyLoop::SectionVerticalLoop;
    case LagrangianSupport::ConormalY: return MonodromyLoop::FiberDyCircle;
    case LagrangianSupport::Fiber:
    case LagrangianSupport::ConormalX: return MonodromyLoop::None;
  }
  return MonodromyLoop::None;
}

}  // namespace cobk
