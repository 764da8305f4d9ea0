#pragma once

#include <cstdint>
#include <vector>

#include "cobk/cob_biell.hpp"
#include "cobk/roitman.hpp"

namespace cobk {

// Receives a row-major matrix and the diagonal computed by the int64 kernel.
using DiagonalCheck = bool (*)(const std::int64_t* matrix, std::size_t rows, std::size_t cols,
                               const std::int64_t* diagonal);

struct SnfSweep {
  std::uint64_t matrices = 0;
  std::uint64_t failures = 0;            // check returned false
  std::uint64_t transform_failures = 0;  // U*M*V != S or U, V not unimodular
  std::vector<std::int64_t> first_failure;
};

// Every rows x cols matrix with entries in [-bound, bound].
SnfSweep snf_sweep(std::size_t rows, std::size_t cols, int bound, DiagonalCheck check,
                   bool verify_transforms, bool parallel);

std::vector<InvariantTuple> normal_forms(const std::vector<FormalSum>& sums, const Coefficients& g,
                                         bool parallel);

struct RoitmanTrial {
  std::size_t q = 0, blocks = 0, dim_v = 0, dim_w = 0;
  bool symplectic_planes = false;
  bool isotropic = false;
  bool holds = false;
  long slack = 0;
};

// Trial index selects its own generator from (seed, index); every fourth trial uses
// symplectic planes. q in {2,3}, at most 3 blocks of dimension at most 4.
RoitmanTrial roitman_trial(std::uint64_t seed, std::uint64_t index);
std::vector<RoitmanTrial> roitman_trials(std::uint64_t seed, std::size_t count, bool parallel);

}  // namespace cobk
