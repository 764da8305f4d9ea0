#pragma once

#include <string>
#include <vector>

#include "cobk/brane.hpp"
#include "cobk/homology.hpp"

namespace cobk {

// An element of (Q/Z) + G.
struct AlbValue {
  CircleValue circle;
  GroupElement group;

  friend AlbValue operator+(const AlbValue& a, const AlbValue& b) {
    return {a.circle + b.circle, a.group + b.group};
  }
  friend AlbValue operator-(const AlbValue& a, const AlbValue& b) {
    return {a.circle - b.circle, a.group - b.group};
  }
  AlbValue operator-() const { return {-circle, -group}; }
  friend AlbValue operator*(const Integer& k, const AlbValue& a) { return {k * a.circle, k * a.group}; }
  friend bool operator==(const AlbValue& a, const AlbValue& b) {
    return a.circle == b.circle && a.group == b.group;
  }
  bool is_zero() const { return circle.is_zero() && group.is_zero(); }
  std::string to_string() const { return "(" + circle.to_string() + "," + group.to_string() + ")"; }
};

struct InvariantTuple {
  H2Class c;
  GroupElement g2;
  AlbValue a, a_prime;

  friend InvariantTuple operator+(const InvariantTuple& x, const InvariantTuple& y) {
    return {x.c + y.c, x.g2 + y.g2, x.a + y.a, x.a_prime + y.a_prime};
  }
  friend InvariantTuple operator-(const InvariantTuple& x, const InvariantTuple& y) {
    return {x.c - y.c, x.g2 - y.g2, x.a - y.a, x.a_prime - y.a_prime};
  }
  friend bool operator==(const InvariantTuple& x, const InvariantTuple& y) {
    return x.c == y.c && x.g2 == y.g2 && x.a == y.a && x.a_prime == y.a_prime;
  }
  bool is_zero() const { return c.is_zero() && g2.is_zero() && a.is_zero() && a_prime.is_zero(); }
  std::string to_string() const;
};

H2Class cyc(const FormalSum& sum);
GroupElement psi(const FormalSum& sum, const Coefficients& g);

// Default local-system distribution.
FormalSum surgery_decompose(const Section& s, const Coefficients& g);
// nus[i] sits on the i-th unit x-copy in bend order; requires sum of sign_i * nus[i] = eta_z.
FormalSum surgery_decompose(const Section& s, const std::vector<GroupElement>& nus,
                            const Coefficients& g);
// Number of unit x-copies and their signs in bend order.
std::vector<int> surgery_copy_signs(const SectionClass& cls);

Fiber fiber_reduce(const Fiber& f);
// Sections decomposed, fibers reduced.
FormalSum reduce(const FormalSum& sum, const Coefficients& g);

AlbValue alb_loc(const FormalSum& sum, const Coefficients& g);
AlbValue alb_prime_loc(const FormalSum& sum, const Coefficients& g);

FormalSum splitting_section(const H2Class& c, const GroupElement& g2, const Coefficients& g);
InvariantTuple normal_form(const FormalSum& sum, const Coefficients& g);
bool is_cobordant(const FormalSum& a, const FormalSum& b, const Coefficients& g);
// A sum with the given normal form whose Albanese part uses one fiber and one x-lift.
FormalSum realize(const InvariantTuple& t, const Coefficients& g);

InvariantTuple zero_tuple(const Coefficients& g);

}  // namespace cobk
