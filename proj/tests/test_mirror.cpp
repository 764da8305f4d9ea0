#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "cobk/mirror.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace cobk;

namespace {

const Coefficients kG(FGAbelianGroup(1, {Integer(2)}));

}  // namespace

TEST_CASE("mirror classes of generators") {
  const GroupElement e = kG.zero();
  IntersectionTable t(kG);
  K0Class z = mirror_class(FormalSum(zero_section(kG, e)), kG);
  K0Class expect = zero_k0(kG);
  expect.n[0] = 1;
  CHECK(z == expect);
  CHECK(h_map(z, t) == ChowClass{1, zero_divisor(kG), zero_zero_cycle(kG)});

  K0Class f = mirror_class(FormalSum(make_fiber(0, Rational(1, 2), e, e)), kG);
  ChowClass fc = h_map(f, t);
  CHECK(fc.fundamental == 0);
  CHECK(fc.divisor == zero_divisor(kG));
  CHECK(fc.zero_cycle == ZeroCycle{1, zero_point(kG)});

  GroupElement g = kG.generator(0);
  FormalSum d = FormalSum(make_lift_x(1, CircleValue(1, 4), g, e)) - FormalSum(make_lift_x(1, CircleValue(), e, e));
  ChowClass dc = h_map(mirror_class(d, kG), t);
  CHECK(dc.fundamental == 0);
  CHECK(dc.zero_cycle.is_zero());
  CHECK(dc.divisor.d1 == 0);
  CHECK_FALSE(dc.divisor.pic0.is_zero());
  CHECK(dc.divisor.pic0 == normal_form(d, kG).a_prime);
}

TEST_CASE("mirror dictionary agrees with normal forms") {
  IntersectionTable t(kG);
  MirrorReport basis = verify_isomorphism(generating_set(kG), t);
  CHECK(basis.ok());
  CHECK(basis.checked == generating_set(kG).size());
  MirrorReport zero = verify_isomorphism({FormalSum()}, t);
  CHECK(zero.ok());
  CHECK(h_map(mirror_class(FormalSum(), kG), t) == zero_chow(kG));
  MirrorReport rnd = verify_isomorphism(random_combinations(kG, 50, 17), t);
  CHECK(rnd.ok());
  CHECK(rnd.checked == 50);
}

TEST_CASE("mirror class is additive") {
  auto combos = random_combinations(kG, 40, 23);
  for (std::size_t i = 0; i + 1 < combos.size(); ++i)
    CHECK(mirror_class(combos[i] + combos[i + 1], kG) == mirror_class(combos[i], kG) + mirror_class(combos[i + 1], kG));
}

TEST_CASE("coordinate change is invertible") {
  IntersectionTable t(kG);
  std::mt19937_64 rng(6);
  auto two = kG.two_torsion_elements();
  for (int i = 0; i < 100; ++i) {
    InvariantTuple x{H2Class(long(rng() % 9) - 4, long(rng() % 9) - 4, long(rng() % 9) - 4, long(rng() % 9) - 4,
                             int(rng() % 2)),
                     two[rng() % two.size()],
                     {CircleValue(oracle::random_rational(rng)), oracle::random_element(kG, rng)},
                     {CircleValue(oracle::random_rational(rng)), oracle::random_element(kG, rng)}};
    CHECK(chow_to_tuple(tuple_to_chow(x, t), t) == x);
  }
}

TEST_CASE("unsupported inputs") {
  const Coefficients z4(FGAbelianGroup(0, {Integer(2), Integer(2)}));
  CHECK_CODE(mirror_class(FormalSum(zero_section(z4, z4.zero())), z4), UnsupportedCoefficients);
  Section s = make_section(SectionClass(1, 0, 0, CircleValue()), kG.zero(), kG.zero());
  CHECK_CODE(mirror_class(FormalSum(s), kG), NotInGeneratorSet);
}
