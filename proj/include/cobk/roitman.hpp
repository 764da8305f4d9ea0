#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "cobk/abelian.hpp"

namespace cobk {

using RationalVector = std::vector<Rational>;

class AlternatingForm {
 public:
  AlternatingForm(std::size_t dim, std::size_t arity);

  // Coefficient of the basis covector e^{i1} ^ ... ^ e^{iq}; indices may come in any order.
  void set(std::vector<std::size_t> indices, const Rational& value);
  Rational coefficient(std::vector<std::size_t> indices) const;

  std::size_t dim() const { return dim_; }
  std::size_t arity() const { return arity_; }
  const std::map<std::vector<std::size_t>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational operator()(const std::vector<RationalVector>& vectors) const;
  // The covector v -> omega(fixed..., v).
  RationalVector contract(const std::vector<RationalVector>& fixed) const;

  static AlternatingForm symplectic(std::size_t half_dim);
  // Cup product and integration on H^1 of the n-torus in the basis dx_1..dx_n.
  static AlternatingForm torus_cup_product(std::size_t n);
  static AlternatingForm random(std::size_t dim, std::size_t arity, std::mt19937_64& rng);

 private:
  std::size_t dim_, arity_;
  std::map<std::vector<std::size_t>, Rational> terms_;  // sorted keys, nonzero values
};

struct GradedSpace {
  std::vector<std::size_t> dims;
  std::size_t total() const;
};

class Subspace {
 public:
  Subspace(std::size_t ambient, std::vector<RationalVector> basis);
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RationalVector>& basis() const { return basis_; }

 private:
  std::size_t ambient_;
  std::vector<RationalVector> basis_;
};

std::size_t rank(const std::vector<RationalVector>& vectors);
// Basis of {v : row . v = 0 for all rows}.
std::vector<RationalVector> null_space(const std::vector<RationalVector>& rows, std::size_t dim);

AlternatingForm summed_pullback(const GradedSpace& blocks, const std::vector<AlternatingForm>& forms);
bool is_isotropic(const Subspace& w, const AlternatingForm& omega);

struct BoundCheck {
  bool holds;
  long slack;
};
BoundCheck check_bound(const GradedSpace& blocks, const std::vector<AlternatingForm>& forms,
                       const Subspace& w);

// Greedy random extension until no isotropic extension exists (or max_dim is reached).
Subspace random_isotropic(const AlternatingForm& omega, std::mt19937_64& rng,
                          std::size_t max_dim = SIZE_MAX);

}  // namespace cobk
