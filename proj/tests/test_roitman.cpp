#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "cobk/roitman.hpp"
#include "test_support.hpp"

using namespace cobk;

namespace {

RationalVector e(std::size_t n, std::size_t i) {
  RationalVector v(n, 0);
  v[i] = 1;
  return v;
}

// Random unimodular change of basis: products of elementary operations.
std::vector<RationalVector> rebase(std::vector<RationalVector> b, std::mt19937_64& rng) {
  for (int step = 0; step < 12 && b.size() > 1; ++step) {
    std::size_t i = rng() % b.size(), j = rng() % b.size();
    if (i == j) continue;
    long k = long(rng() % 5) - 2;
    for (std::size_t c = 0; c < b[i].size(); ++c) b[i][c] += k * b[j][c];
    if (rng() % 3 == 0) std::swap(b[i], b[j]);
  }
  return b;
}

}  // namespace

TEST_CASE("alternating forms") {
  AlternatingForm w(3, 2);
  w.set({1, 0}, 2);
  CHECK(w.coefficient({0, 1}) == -2);
  CHECK(w({e(3, 0), e(3, 1)}) == -2);
  CHECK(w({e(3, 1), e(3, 1)}) == 0);
  CHECK(w.contract({e(3, 0)}) == RationalVector{0, -2, 0});
  CHECK_CODE(w.set({1, 1}, 1), InvalidArgument);
  CHECK_CODE(w.set({0, 1, 2}, 1), DimensionMismatch);
  AlternatingForm v(3, 3);
  v.set({0, 1, 2}, 1);
  CHECK(v({e(3, 1), e(3, 0), e(3, 2)}) == -1);
  CHECK(v.contract({e(3, 0), e(3, 1)}) == RationalVector{0, 0, 1});
}

TEST_CASE("summed pullback") {
  AlternatingForm s = AlternatingForm::symplectic(1);
  AlternatingForm sum = summed_pullback(GradedSpace{{2, 2}}, {s, s});
  CHECK(sum.terms() == AlternatingForm::symplectic(2).terms());
  CHECK(summed_pullback(GradedSpace{{2}}, {s}).terms() == s.terms());
  AlternatingForm cup = AlternatingForm::torus_cup_product(2);
  CHECK(cup({e(2, 0), e(2, 1)}) == 1);
  CHECK(cup({e(2, 1), e(2, 0)}) == -1);
  CHECK_CODE(summed_pullback(GradedSpace{{2, 2}}, {s}), DimensionMismatch);
  CHECK_CODE(summed_pullback(GradedSpace{{2}}, {AlternatingForm(2, 2)}), ZeroBlockForm);
}

TEST_CASE("isotropy") {
  AlternatingForm w = AlternatingForm::symplectic(2);
  CHECK(is_isotropic(Subspace(4, {}), w));
  CHECK(is_isotropic(Subspace(4, {e(4, 0), e(4, 2)}), w));
  CHECK_FALSE(is_isotropic(Subspace(4, {e(4, 0), e(4, 1), e(4, 2), e(4, 3)}), w));
  CHECK_CODE(is_isotropic(Subspace(3, {e(3, 0)}), w), DimensionMismatch);
  CHECK_CODE(Subspace(2, {e(2, 0), e(2, 0)}), InvalidArgument);
}

TEST_CASE("isotropy does not depend on the basis") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    std::size_t q = 2 + rng() % 2, n = q + rng() % 4;
    AlternatingForm w = AlternatingForm::random(n, q, rng);
    Subspace s = random_isotropic(w, rng);
    CHECK(is_isotropic(s, w));
    Subspace r(n, rebase(s.basis(), rng));
    CHECK(is_isotropic(r, w));
    std::vector<RationalVector> extended = s.basis();
    extended.push_back(e(n, rng() % n));
    if (rank(extended) == extended.size()) {
      bool a = is_isotropic(Subspace(n, extended), w);
      CHECK(is_isotropic(Subspace(n, rebase(extended, rng)), w) == a);
    }
  }
}

TEST_CASE("dimension bound") {
  AlternatingForm s = AlternatingForm::symplectic(1);
  GradedSpace v{{2, 2}};
  BoundCheck tight = check_bound(v, {s, s}, Subspace(4, {e(4, 0), e(4, 2)}));
  CHECK(tight.holds);
  CHECK(tight.slack == 0);
  BoundCheck empty = check_bound(v, {s, s}, Subspace(4, {}));
  CHECK(empty.holds);
  CHECK(empty.slack == 2);
  CHECK_CODE(check_bound(v, {s, s}, Subspace(4, {e(4, 0), e(4, 1)})), NotIsotropic);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    Subspace w = random_isotropic(summed_pullback(v, {s, s}), rng);
    CHECK(w.dim() == 2);
  }
}

TEST_CASE("linear algebra helpers") {
  CHECK(rank({{1, 2}, {2, 4}}) == 1);
  auto k = null_space({{1, 1, 0}}, 3);
  CHECK(k.size() == 2);
  for (const auto& v : k) CHECK(v[0] + v[1] == 0);
}
