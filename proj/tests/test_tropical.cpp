#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "cobk/tropical.hpp"
#include "test_support.hpp"

using namespace cobk;

namespace {

const Mat2 kFlip{{1, 0, 0, -1}};
const AffineInvolution kGlide{kFlip, {Rational(1, 2), Rational(0)}};

// Slopes read off a PL function by finite differences on a fine grid.
Integer slope_between(const PLFunction1D& f, const Rational& a, const Rational& b) {
  Rational s = (f(b) - f(a)) / (b - a);
  REQUIRE(s.get_den() == 1);
  return s.get_num();
}

}  // namespace

TEST_CASE("standardize the glide involution") {
  TropicalKlein k = standardize(Lattice2(), kGlide);
  CHECK(k.family == KleinFamily::K1);
  CHECK(k.involution.linear == kFlip);
  CHECK(k.involution.translation == Vec2{Rational(1, 2), Rational(0)});
  CHECK(k.lattice == Lattice2());
}

TEST_CASE("half-diagonal lattice is family K2") {
  TropicalKlein k = standard_klein(Lattice2(Mat2::from_columns({1, 0}, {Rational(1, 2), Rational(1, 2)})));
  CHECK(k.family == KleinFamily::K2);
  CHECK(standard_klein(Lattice2()).family == KleinFamily::K1);
}

TEST_CASE("standardize rejects bad involutions") {
  CHECK_CODE(standardize(Lattice2(), AffineInvolution{Mat2::identity(), {Rational(1, 2), Rational(0)}}),
             NotOrientationReversing);
  CHECK_CODE(standardize(Lattice2(), AffineInvolution{kFlip, {Rational(0), Rational(0)}}), HasFixedPoints);
  CHECK_CODE(standardize(Lattice2(), AffineInvolution{kFlip, {Rational(1, 3), Rational(0)}}), NotAnInvolution);
  CHECK_CODE(standard_klein(Lattice2(Mat2::from_columns({1, 1}, {0, 3}))), LatticeNotInvariant);
}

TEST_CASE("input form round trips") {
  for (const auto& k : {standard_klein(Lattice2()), standard_klein(Lattice2(Mat2{{2, 0, 0, 1}}))}) {
    auto [lat, inv] = input_form(k);
    CHECK(standardize(lat, inv) == k);
  }
}

TEST_CASE("section representatives") {
  CHECK(section_representative(SectionClass(1, 0, 0, CircleValue())) ==
        QuadraticSection{Rational(1, 2), 0, 0, 0});
  CHECK(section_representative(SectionClass()) == QuadraticSection{0, 0, 0, 0});
  CHECK(section_representative(SectionClass(2, 3, 1, CircleValue(1, 4))) ==
        QuadraticSection{1, Rational(3, 2), Rational(1, 2), Rational(1, 4)});
}

TEST_CASE("the basic PL function") {
  PLFunction1D f = PLFunction1D::frak_f();
  CHECK(slope_between(f, Rational(-1, 2), Rational(1, 2)) == 0);
  CHECK(slope_between(f, Rational(1, 2), Rational(3, 2)) == 1);
  CHECK(slope_between(f, Rational(-3, 2), Rational(-1, 2)) == -1);
  CHECK(satisfies_periodicity(f, 1, 0, true));
  auto [fx, fy] = pl_approximation(SectionClass(1, 0, 0, CircleValue()));
  CHECK(fx == f);
  CHECK(fy == PLFunction1D());
}

TEST_CASE("PL approximations satisfy the quasi-periodicity") {
  auto [cx, cy] = pl_approximation(SectionClass());
  CHECK(cx == PLFunction1D());
  CHECK(cy == PLFunction1D());
  PLFunction1D g = PLFunction1D::frak_f_phi(CircleValue(1, 3));
  CHECK(g(1) - g(0) == Rational(1, 3));
  CHECK(g(Rational(7, 3)) - g(Rational(4, 3)) == Rational(1, 3));
  for (long m = -3; m <= 3; ++m)
    for (const auto& th : {Rational(0), Rational(1, 4), Rational(1, 3), Rational(2, 5)}) {
      auto [fx, fy] = pl_approximation(SectionClass(m, 0, 0, CircleValue(th)));
      CHECK(satisfies_periodicity(fx, m, th, th == 0));
    }
}

TEST_CASE("bend loci") {
  TropicalHypersurface h = bend_locus(PLFunction1D::frak_f());
  REQUIRE(h.components.size() == 1);
  CHECK(h.components[0] == HypersurfaceComponent{Axis::X, CircleValue(1, 2), 1});
  CHECK(bend_locus(PLFunction1D()).components.empty());
  for (long m = -4; m <= 4; ++m) {
    if (m == 0) continue;
    TropicalHypersurface hm = bend_locus(Integer(m) * PLFunction1D::frak_f(), Axis::Y);
    REQUIRE(hm.components.size() == 1);
    CHECK(hm.components[0] == HypersurfaceComponent{Axis::Y, CircleValue(1, 2), m});
    CHECK(hm.total_weight(Axis::Y) == m);
  }
  TropicalHypersurface t = bend_locus(PLFunction1D::frak_f_phi(CircleValue(1, 4)));
  CHECK(t.total_weight(Axis::X) == 0);
  CHECK(t.components.size() == 2);
}

TEST_CASE("Albanese data") {
  AlbaneseData d = albanese_data(standard_klein(Lattice2()));
  CHECK(d.form == Vec2{1, 0});
  CHECK(d.period == Rational(1, 2));
  TropicalKlein wide = standardize(Lattice2(Mat2{{2, 0, 0, 1}}), AffineInvolution{kFlip, {Rational(1), Rational(0)}});
  CHECK(albanese_data(wide).period == 1);
  TropicalKlein k2 = standard_klein(Lattice2(Mat2::from_columns({1, 0}, {Rational(1, 2), Rational(1, 2)})));
  CHECK_CODE(albanese_data(k2), UnsupportedFamily);
}

TEST_CASE("Albanese map on zero-cycles") {
  TropicalKlein k = standard_klein(Lattice2());
  CHECK(alb_zero_cycle({{1, {Rational(1, 4), 0}}, {-1, {0, 0}}}, k) == CircleValue(1, 2));
  CHECK(alb_zero_cycle({{1, {Rational(1, 3), Rational(2, 3)}}, {-1, {Rational(1, 3), Rational(2, 3)}}}, k).is_zero());
  CHECK(alb_zero_cycle({{1, {Rational(1, 2), Rational(1, 5)}}, {-1, {0, Rational(1, 5)}}}, k).is_zero());
  CHECK_CODE(alb_zero_cycle({{1, {0, 0}}}, k), NonzeroDegree);
}
