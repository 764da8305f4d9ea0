#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cobk/brane.hpp"

namespace cobk {

struct RelationResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  bool vanishes() const { return failures == 0; }
};

// relation1T2, relation2T2, the section-to-generators grid, 2 F1, 4 F2 and F2.
std::vector<RelationResult> check_relations(const Coefficients& g);

}  // namespace cobk
