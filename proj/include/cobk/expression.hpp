#pragma once

#include <string>
#include <vector>

#include "cobk/brane.hpp"
#include "cobk/cob_t2.hpp"

namespace cobk {

// Grammar (whitespace ignored):
//   sum    := "0" | ["+"|"-"] term (("+"|"-") term)*
//   term   := [int "*"] brane
//   brane  := "F(" rat "," rat ")" [decor]
//           | "Gamma(" keys ")" [decor]                 keys m, n, l, theta, s
//           | "Lx(" keys ")" [decor] | "Lx[" comps "]" [decor]   keys m, theta
//           | "Ly(" keys ")" [decor] | "Ly[" comps "]"           keys n, l
//   comps  := rat ":" int [decor] ("," rat ":" int [decor])*
//   decor  := "{" name "=" group ("," name "=" group)* "}"
//   group  := gterm (("+"|"-") gterm)*,  gterm := [int "*"] ("e" | "g" index | "[" int,... "]")
// Generators gK are 1-based.
FormalSum parse_formal_sum(const std::string& text, const Coefficients& g);
GroupElement parse_group_element(const std::string& text, const Coefficients& g);

// T^2 sums: terms [int "*"] ("H(" rat ")" | "V(" rat ")") [{g=group}].
std::vector<CircleBrane> parse_t2_sum(const std::string& text, const Coefficients& g);
std::string to_string(const std::vector<CircleBrane>& sum);

}  // namespace cobk
