#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "cobk/abelian.hpp"
#include "cobk/tropical.hpp"

namespace cobk {

// The coefficient group G of the local systems, with its 2-torsion G_(2).
// Elements of G_(2) are stored as elements of G.
class Coefficients {
 public:
  explicit Coefficients(const FGAbelianGroup& g);

  const FGAbelianGroup& group() const { return *group_; }
  const std::shared_ptr<const FGAbelianGroup>& group_ptr() const { return group_; }
  GroupElement zero() const;
  GroupElement element(std::vector<Integer> coords) const;
  GroupElement generator(std::size_t i) const;
  std::vector<GroupElement> generators() const;

  const FGAbelianGroup& two_torsion() const { return two_torsion_.group; }
  GroupElement embed_two_torsion(const GroupElement& x) const { return two_torsion_.inclusion(x); }
  bool is_two_torsion(const GroupElement& x) const { return (Integer(2) * x).is_zero(); }
  // Every element of G_(2).
  std::vector<GroupElement> two_torsion_elements() const;

 private:
  std::shared_ptr<const FGAbelianGroup> group_;
  SubgroupResult two_torsion_;
};

// Standard chart: (x, y) with 0 <= x < 1/2, 0 <= y < 1.
struct Fiber {
  Rational x, y;
  GroupElement lx, ly;
};

struct Section {
  SectionClass cls;
  int parity = 1;
  GroupElement eta_z, eta_z2;
};

// Bend positions are unit-frame x coordinates in R/Z.
struct LiftXComponent {
  CircleValue position;
  Integer weight;
  GroupElement nu;
};
struct LiftX {
  std::vector<LiftXComponent> components;
  GroupElement eta_z2;
};

// Positions are 0 or 1/2; nu lies in G_(2).
struct LiftYComponent {
  CircleValue position;
  Integer weight;
  GroupElement nu;
};
struct LiftY {
  std::vector<LiftYComponent> components;
};

using Brane = std::variant<Fiber, Section, LiftX, LiftY>;

Fiber make_fiber(const Rational& x, const Rational& y, const GroupElement& lx, const GroupElement& ly);
Section make_section(const SectionClass& cls, const GroupElement& eta_z, const GroupElement& eta_z2,
                     int parity = 1);
Section zero_section(const Coefficients& g, const GroupElement& h);
// m f + f_theta, the first positive unit copy carrying nu.
LiftX make_lift_x(const Integer& m, const CircleValue& theta, const GroupElement& nu,
                  const GroupElement& eta_z2);
// n f + f_{l/2}, one unit copy of the bend at 1/2 carrying nu.
LiftY make_lift_y(const Integer& n, int l, const GroupElement& nu);

// Canonical chart, merged components, range checks.
Brane canonical(const Brane& b);
std::string to_string(const Brane& b);

class FormalSum {
 public:
  struct Term {
    Brane brane;
    Integer coeff;
  };

  FormalSum() = default;
  FormalSum(const Brane& b) { add(b, 1); }

  // Canonicalizes b; a section of parity -1 enters as its parity +1 twin with negated coefficient.
  void add(const Brane& b, const Integer& coeff);
  std::vector<Term> terms() const;
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  FormalSum& operator+=(const FormalSum& o);
  FormalSum& operator-=(const FormalSum& o);
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator*(const Integer& k, const FormalSum& a);
  FormalSum operator-() const { return Integer(-1) * *this; }
  friend bool operator==(const FormalSum& a, const FormalSum& b);

  std::string to_string() const;

 private:
  std::map<std::string, Term> terms_;
};

}  // namespace cobk
