#pragma once

#include <string>
#include <vector>

#include "cobk/abelian.hpp"

namespace cobk {

enum class Direction { Horizontal, Vertical };

// Horizontal: S^1 x {position}; vertical: {position} x S^1.
struct CircleBrane {
  Direction direction;
  CircleValue position;
  GroupElement monodromy;
  int sign = 1;
};

struct T2Class {
  Integer hx = 0, hy = 0;
  CircleValue flux;
  GroupElement monodromy;

  friend bool operator==(const T2Class&, const T2Class&) = default;
  T2Class operator-() const { return {-hx, -hy, -flux, -monodromy}; }
  friend T2Class operator+(const T2Class& a, const T2Class& b) {
    return {a.hx + b.hx, a.hy + b.hy, a.flux + b.flux, a.monodromy + b.monodromy};
  }
  std::string to_string() const;
};

CircleValue flux(const std::vector<CircleBrane>& sum);
T2Class normal_form_t2(const std::vector<CircleBrane>& sum, const FGAbelianGroup& g);
// A sum of straight circles whose normal form is the given class.
std::vector<CircleBrane> realize_t2(const T2Class& c);

}  // namespace cobk
