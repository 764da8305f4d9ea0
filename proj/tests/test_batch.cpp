#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "cobk/batch.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace cobk;

namespace {

bool agrees(const std::int64_t* m, std::size_t r, std::size_t c, const std::int64_t* d) {
  auto f = oracle::invariant_factors(m, r, c);
  for (std::size_t i = 0; i < std::min(r, c); ++i)
    if (f[i] != d[i]) return false;
  return true;
}

bool always_wrong(const std::int64_t*, std::size_t, std::size_t, const std::int64_t*) { return false; }

}  // namespace

TEST_CASE("parallel and serial sweeps agree") {
  for (std::size_t r = 1; r <= 2; ++r)
    for (std::size_t c = 1; c <= 3; ++c) {
      SnfSweep s = snf_sweep(r, c, 2, agrees, true, false);
      SnfSweep p = snf_sweep(r, c, 2, agrees, true, true);
      std::uint64_t expected = 1;
      for (std::size_t i = 0; i < r * c; ++i) expected *= 5;
      CHECK(s.matrices == expected);
      CHECK(p.matrices == expected);
      CHECK(s.failures == 0);
      CHECK(p.failures == 0);
      CHECK(s.transform_failures == 0);
    }
}

TEST_CASE("sweep reports failures") {
  SnfSweep s = snf_sweep(1, 1, 1, always_wrong, false, true);
  CHECK(s.failures == 3);
  CHECK(s.first_failure.size() == 1);
}

TEST_CASE("batched normal forms match one-at-a-time evaluation") {
  Coefficients g(FGAbelianGroup(1, {Integer(2)}));
  std::mt19937_64 rng(14);
  std::vector<FormalSum> sums;
  for (int i = 0; i < 60; ++i) sums.push_back(oracle::random_sum(g, rng));
  auto serial = normal_forms(sums, g, false);
  auto parallel = normal_forms(sums, g, true);
  REQUIRE(serial.size() == sums.size());
  for (std::size_t i = 0; i < sums.size(); ++i) {
    CHECK(serial[i] == normal_form(sums[i], g));
    CHECK(parallel[i] == serial[i]);
  }
}

TEST_CASE("Roitman trials are reproducible and independent of scheduling") {
  auto a = roitman_trials(21, 80, false);
  auto b = roitman_trials(21, 80, true);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].dim_w == b[i].dim_w);
    CHECK(a[i].slack == b[i].slack);
    CHECK(a[i].holds);
    CHECK(a[i].isotropic);
    RoitmanTrial one = roitman_trial(21, i);
    CHECK(one.dim_v == a[i].dim_v);
  }
}
