#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cobk/chow_k0.hpp"

namespace cobk {

struct ConfigPoint {
  Rational circle = 0;
  std::vector<Integer> group;  // empty means the identity
};

struct ConfigProduct {
  DivisorGenerator i, j;
  Integer degree = 0;
  ConfigPoint alb;
};

struct Config {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion{2};
  std::optional<ConfigPoint> half_class;
  std::vector<ConfigProduct> products;
  std::map<DivisorGenerator, Integer> pic0_multipliers;
  std::uint64_t seed = 0;

  Coefficients coefficients() const;
  IntersectionTable table(const Coefficients& g) const;
};

// JSON document; see README for the schema. Raises InvalidArgument on malformed input.
Config parse_config(const std::string& json_text);
Config load_config(const std::string& path);

}  // namespace cobk
