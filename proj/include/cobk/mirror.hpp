#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cobk/chow_k0.hpp"

namespace cobk {

// Generators: fibers, x-lifts, y-lifts and Gamma_0, all with local systems.
// Requires G_(2) = Z/2.
K0Class mirror_class(const FormalSum& sum, const Coefficients& g);

// Fixed coordinate change from invariant tuples to Chow coordinates, and its inverse.
ChowClass tuple_to_chow(const InvariantTuple& t, const IntersectionTable& table);
InvariantTuple chow_to_tuple(const ChowClass& c, const IntersectionTable& table);

struct Mismatch {
  std::string input;
  ChowClass mirror_side, tropical_side;
};

struct MirrorReport {
  std::size_t checked = 0;
  std::vector<Mismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

MirrorReport verify_isomorphism(const std::vector<FormalSum>& grid, const IntersectionTable& table);

// One brane per generator type and local-system generator, with a few positions.
std::vector<FormalSum> generating_set(const Coefficients& g);
// Random integer combinations of generators with random rational parameters.
std::vector<FormalSum> random_combinations(const Coefficients& g, std::size_t count, std::uint64_t seed);

}  // namespace cobk
