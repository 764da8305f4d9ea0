#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cobk/abelian.hpp"

namespace cobk {

using Vec2 = std::array<Rational, 2>;

// 2x2 rational matrix, row-major.
struct Mat2 {
  std::array<Rational, 4> a{0, 0, 0, 0};

  static Mat2 identity() { return {{1, 0, 0, 1}}; }
  static Mat2 from_columns(const Vec2& c0, const Vec2& c1) { return {{c0[0], c1[0], c0[1], c1[1]}}; }
  const Rational& operator()(int i, int j) const { return a[2 * i + j]; }
  Rational& operator()(int i, int j) { return a[2 * i + j]; }
  Vec2 column(int j) const { return {a[j], a[2 + j]}; }
  Rational det() const { return a[0] * a[3] - a[1] * a[2]; }
  Mat2 inverse() const;
  bool is_integral() const;
  Vec2 operator*(const Vec2& v) const { return {a[0] * v[0] + a[1] * v[1], a[2] * v[0] + a[3] * v[1]}; }
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2& x, const Mat2& y) { return x.a == y.a; }
};

struct Lattice2 {
  Mat2 basis;  // columns generate the lattice
  explicit Lattice2(const Mat2& b);
  Lattice2() : basis(Mat2::identity()) {}
  bool contains(const Vec2& v) const;
  bool operator==(const Lattice2& o) const;  // equality as subgroups
};

struct AffineInvolution {
  Mat2 linear;
  Vec2 translation;
  Vec2 operator()(const Vec2& p) const;
};

enum class KleinFamily { K1, K2 };
const char* family_name(KleinFamily f);

// Standard Klein bottle K_L: R^2 / Z^2 with the affine structure of the
// lattice L, quotiented by (x,y) -> (x+1/2, -y).
struct TropicalKlein {
  KleinFamily family;
  Lattice2 lattice;  // canonical basis (l1, l2) or (l1, (l1+l2)/2), l1,l2 > 0 on the axes
  AffineInvolution involution;

  bool operator==(const TropicalKlein& o) const {
    return family == o.family && lattice.basis == o.lattice.basis;
  }
};

// Input convention: the torus R^2 / lattice with its standard affine
// structure Z^2, and an affine involution with integral linear part.
TropicalKlein standardize(const Lattice2& lattice, const AffineInvolution& involution);
TropicalKlein standard_klein(const Lattice2& affine_structure);
// Inverse of standardize on standard data: torus lattice and involution in
// the input convention.
std::pair<Lattice2, AffineInvolution> input_form(const TropicalKlein& k);

struct SectionClass {
  Integer m = 0, n = 0;
  int l = 0;
  CircleValue theta;

  SectionClass() = default;
  SectionClass(Integer m_, Integer n_, int l_, CircleValue theta_);
  bool is_zero_section() const { return m == 0 && n == 0 && l == 0 && theta.is_zero(); }
  friend bool operator==(const SectionClass&, const SectionClass&) = default;
};

// Coefficients of (m/2) x^2 + (n/2) y^2 + (l/2) y + theta x.
struct QuadraticSection {
  Rational xx, yy, y, x;
  friend bool operator==(const QuadraticSection&, const QuadraticSection&) = default;
};
QuadraticSection section_representative(const SectionClass& s);

// Piecewise-linear function R -> R with integer slopes, normalized by f(0) = 0,
// whose derivative satisfies f'(x+1) = f'(x) + slope_shift.
class PLFunction1D {
 public:
  PLFunction1D();  // constant
  PLFunction1D(std::vector<Rational> cuts, std::vector<Integer> slopes, Integer slope_shift);

  static PLFunction1D frak_f();
  static PLFunction1D frak_f_phi(const CircleValue& phi);

  const std::vector<Rational>& cuts() const { return cuts_; }
  const std::vector<Integer>& slopes() const { return slopes_; }
  const Integer& slope_shift() const { return shift_; }
  // Points of [0,1) where the slope jumps.
  std::vector<Rational> breakpoints() const;
  Integer jump_at(const Rational& x) const;
  Rational drift() const;
  Rational operator()(const Rational& x) const;
  Integer right_slope(const Rational& x) const;

  friend PLFunction1D operator+(const PLFunction1D& f, const PLFunction1D& g);
  friend PLFunction1D operator*(const Integer& k, const PLFunction1D& f);
  friend bool operator==(const PLFunction1D&, const PLFunction1D&) = default;

 private:
  std::size_t interval(const Rational& r) const;
  void simplify();

  std::vector<Rational> cuts_;   // sorted, inside (0,1)
  std::vector<Integer> slopes_;  // slopes on the cuts.size()+1 intervals of [0,1)
  Integer shift_ = 0;
};

// (m f + f_theta)(x) and (n f + f_{l/2})(y).
std::pair<PLFunction1D, PLFunction1D> pl_approximation(const SectionClass& s);

// Checks f(x) - f(x+1) = h(x) - h(x+1) for h = (m/2) x^2 + phi x and, when
// with_reflection, f(x) - f(-x) = h(x) - h(-x), by exact evaluation on every
// linear piece over a window of periods.
bool satisfies_periodicity(const PLFunction1D& f, const Integer& m, const Rational& phi,
                           bool with_reflection);

enum class Axis { X, Y };

struct HypersurfaceComponent {
  Axis axis;
  CircleValue position;
  Integer weight;
  friend bool operator==(const HypersurfaceComponent&, const HypersurfaceComponent&) = default;
};

struct TropicalHypersurface {
  std::vector<HypersurfaceComponent> components;
  Integer total_weight(Axis axis) const;
};

TropicalHypersurface bend_locus(const PLFunction1D& f, Axis axis = Axis::X);

struct AlbaneseData {
  Vec2 form;  // the primitive invariant integral 1-form, a multiple of dx
  Rational period;
};
AlbaneseData albanese_data(const TropicalKlein& k);

struct SignedPoint {
  int sign;
  Vec2 point;
};
CircleValue alb_zero_cycle(const std::vector<SignedPoint>& points, const TropicalKlein& k);

}  // namespace cobk
