#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cobk {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
std::string to_string(const Integer& x);
// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);
Rational parse_rational(const std::string& text);
Integer floor_of(const Rational& x);
// Non-negative residue of a modulo m (m > 0).
Integer mod_floor(const Integer& a, const Integer& m);

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const std::vector<Integer>& entries() const { return entries_; }

  IntegerMatrix transpose() const;
  std::vector<Integer> column(std::size_t j) const;
  std::vector<Integer> apply(const std::vector<Integer>& x) const;
  bool is_zero() const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

Integer determinant(const IntegerMatrix& m);
bool is_unimodular(const IntegerMatrix& m);
IntegerMatrix inverse_unimodular(const IntegerMatrix& m);
std::string to_string(const IntegerMatrix& m);

struct SmithForm {
  IntegerMatrix S, U, V;
  // Diagonal entries of S, min(rows, cols) of them.
  std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntegerMatrix& m);

class FGAbelianGroup {
 public:
  FGAbelianGroup() = default;
  // torsion must already be a divisibility chain with entries >= 2.
  FGAbelianGroup(std::size_t free_rank, std::vector<Integer> torsion);

  static FGAbelianGroup free(std::size_t rank) { return FGAbelianGroup(rank, {}); }
  static FGAbelianGroup cyclic(const Integer& order);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  std::size_t num_generators() const { return free_rank_ + torsion_.size(); }
  // Order of the i-th generator, 0 for free generators.
  Integer generator_order(std::size_t i) const;
  bool is_trivial() const { return num_generators() == 0; }
  bool is_finite() const { return free_rank_ == 0; }
  Integer cardinality() const;
  std::string to_string() const;

  friend bool operator==(const FGAbelianGroup&, const FGAbelianGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

class GroupElement {
 public:
  GroupElement();
  GroupElement(const FGAbelianGroup& parent, std::vector<Integer> coords);
  GroupElement(std::shared_ptr<const FGAbelianGroup> parent, std::vector<Integer> coords);

  static GroupElement zero(const FGAbelianGroup& parent);
  static GroupElement generator(const FGAbelianGroup& parent, std::size_t i);

  const FGAbelianGroup& parent() const { return *parent_; }
  const std::shared_ptr<const FGAbelianGroup>& parent_ptr() const { return parent_; }
  const std::vector<Integer>& coords() const { return coords_; }
  bool is_zero() const;
  // Order of the element, 0 if infinite.
  Integer order() const;

  GroupElement operator-() const;
  GroupElement& operator+=(const GroupElement& o);
  GroupElement& operator-=(const GroupElement& o);
  friend GroupElement operator+(GroupElement a, const GroupElement& b) { return a += b; }
  friend GroupElement operator-(GroupElement a, const GroupElement& b) { return a -= b; }
  friend GroupElement operator*(const Integer& k, const GroupElement& a);
  friend bool operator==(const GroupElement& a, const GroupElement& b);
  friend bool operator<(const GroupElement& a, const GroupElement& b);

  // "e" for the identity, otherwise "[c1,c2,...]".
  std::string to_string() const;

 private:
  void reduce();
  void check_same_parent(const GroupElement& o) const;

  std::shared_ptr<const FGAbelianGroup> parent_;
  std::vector<Integer> coords_;
};

class CircleValue {
 public:
  CircleValue() = default;
  CircleValue(const Rational& v);
  CircleValue(long num, long den) : CircleValue(make_rational(num, den)) {}

  const Rational& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  CircleValue operator-() const { return CircleValue(-value_); }
  friend CircleValue operator+(const CircleValue& a, const CircleValue& b) {
    return CircleValue(a.value_ + b.value_);
  }
  friend CircleValue operator-(const CircleValue& a, const CircleValue& b) {
    return CircleValue(a.value_ - b.value_);
  }
  friend CircleValue operator*(const Integer& k, const CircleValue& a) {
    return CircleValue(Rational(k) * a.value_);
  }
  CircleValue& operator+=(const CircleValue& o) { return *this = *this + o; }
  CircleValue& operator-=(const CircleValue& o) { return *this = *this - o; }
  friend bool operator==(const CircleValue& a, const CircleValue& b) { return a.value_ == b.value_; }
  friend bool operator<(const CircleValue& a, const CircleValue& b) { return a.value_ < b.value_; }

  std::string to_string() const { return cobk::to_string(value_); }

 private:
  Rational value_ = 0;
};

class GroupHom {
 public:
  GroupHom() = default;
  // matrix is codomain.num_generators() x domain.num_generators().
  GroupHom(FGAbelianGroup domain, FGAbelianGroup codomain, IntegerMatrix matrix);

  static GroupHom identity(const FGAbelianGroup& g);
  static GroupHom zero(const FGAbelianGroup& domain, const FGAbelianGroup& codomain);
  static GroupHom scalar(const FGAbelianGroup& g, const Integer& n);

  const FGAbelianGroup& domain() const { return domain_; }
  const FGAbelianGroup& codomain() const { return codomain_; }
  const IntegerMatrix& matrix() const { return matrix_; }

  GroupElement operator()(const GroupElement& x) const;
  bool is_zero() const;
  bool is_surjective() const;
  bool is_injective() const;

  friend GroupHom compose(const GroupHom& g, const GroupHom& f);

 private:
  FGAbelianGroup domain_;
  FGAbelianGroup codomain_;
  IntegerMatrix matrix_;
};

// The quotient Z^k / (column span of relations), in canonical form, with the
// projection Z^k -> group and chosen preimages of the group generators.
struct Presentation {
  FGAbelianGroup group;
  IntegerMatrix projection;  // group.num_generators() x k
  IntegerMatrix lift;        // k x group.num_generators()
};
Presentation present(const IntegerMatrix& relations);

// Canonical form of a direct sum of cyclic groups Z/orders[i] (0 meaning Z).
struct Canonicalized {
  FGAbelianGroup group;
  IntegerMatrix to_canonical;    // cyclic coordinates -> group coordinates
  IntegerMatrix from_canonical;  // group coordinates -> cyclic coordinates
};
Canonicalized canonicalize(const std::vector<Integer>& orders);

struct QuotientResult {
  FGAbelianGroup group;
  GroupHom projection;
};
QuotientResult cokernel(const GroupHom& f);

struct SubgroupResult {
  FGAbelianGroup group;
  GroupHom inclusion;
};
SubgroupResult kernel(const GroupHom& f);
SubgroupResult n_torsion(const FGAbelianGroup& a, const Integer& n);

// Some x with f(x) = y, if one exists.
std::optional<GroupElement> preimage(const GroupHom& f, const GroupElement& y);
// Inverse of an isomorphism.
GroupHom inverse(const GroupHom& iso);
// Integer solution of n*x = y, if one exists.
std::optional<std::vector<Integer>> solve_integer(const IntegerMatrix& n, const std::vector<Integer>& y);

struct DirectSum {
  FGAbelianGroup group;
  GroupHom inclusion_left, inclusion_right;
};
DirectSum direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b);

}  // namespace cobk
