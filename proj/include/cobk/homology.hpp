#pragma once

#include <string>
#include <vector>

#include "cobk/abelian.hpp"
#include "cobk/tropical.hpp"

namespace cobk {

// Coordinates (N_f, N_0, m, n, [l]) in Z^4 + Z/2 = H_2(K; xi).
struct H2Class {
  Integer a = 0, b = 0, m = 0, n = 0;
  int l = 0;

  H2Class() = default;
  H2Class(Integer a_, Integer b_, Integer m_, Integer n_, int l_);

  bool is_zero() const { return a == 0 && b == 0 && m == 0 && n == 0 && l == 0; }
  H2Class operator-() const;
  friend H2Class operator+(const H2Class& x, const H2Class& y);
  friend H2Class operator-(const H2Class& x, const H2Class& y) { return x + (-y); }
  friend H2Class operator*(const Integer& k, const H2Class& x);
  friend bool operator==(const H2Class&, const H2Class&) = default;
  std::string to_string() const;
};

struct TwistedH2 {
  FGAbelianGroup group;
  std::vector<std::string> generators;
  GroupHom named_basis;  // Z^4 + Z/2 in generator order -> group, an isomorphism
  FGAbelianGroup kernel_term;
  FGAbelianGroup quotient_term;

  H2Class to_named(const GroupElement& x) const;
};

TwistedH2 compute_h2_twisted();

// Mayer-Vietoris inclusion data, exposed for inspection and tests.
IntegerMatrix mv_inclusion_h1();
IntegerMatrix mv_inclusion_h2();
IntegerMatrix mv_inclusion_h3();

H2Class class_of_section(const SectionClass& s);
H2Class class_of_fiber();
H2Class class_of_lift_x(const Integer& m);
H2Class class_of_lift_y(const Integer& n, int l);

struct TwistedH3 {
  FGAbelianGroup group;
  std::vector<std::string> generators;  // [K]x dx, pi^-1(glide loop), pi^-1(C1)
  GroupHom named_basis;                 // Z^2 + Z/2 in generator order -> group
};
TwistedH3 compute_h3_twisted();

struct H3TwoTorsion {
  FGAbelianGroup group;
  GroupHom inclusion;
  GroupElement generator;      // in H_3(K; xi)
  std::string representative;  // chain-level description of the generator
};
H3TwoTorsion h3_two_torsion();

// H_3(K; xi) -> H_1(K; Z) = Z<glide loop> + Z/2<vertical loop>.
GroupHom h3_to_h1_projection();

// Support types of tropical branes, and the 1-cycle C_L cut out on them by
// the H_3 two-torsion representative pi^-1({x = x0}) for generic x0.
enum class LagrangianSupport { Fiber, Section, ConormalX, ConormalY };
enum class MonodromyLoop { None, SectionVerticalLoop, FiberDyCircle };
MonodromyLoop h3_cycle_intersection(LagrangianSupport support);

}  // namespace cobk
