#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cobk/cob_biell.hpp"

namespace cobk {

// Points of the elliptic curve model E = (Q/Z) + G.
using EPoint = AlbValue;

// CH^1 = Z D1 + Z D2 + Z/2 D3 + Z/2 D4 + Pic^0, the last written through D5^p.
struct Divisor {
  Integer d1 = 0, d2 = 0;
  int d3 = 0, d4 = 0;
  EPoint pic0;

  Divisor operator-() const;
  friend Divisor operator+(const Divisor& a, const Divisor& b);
  friend Divisor operator-(const Divisor& a, const Divisor& b) { return a + (-b); }
  friend Divisor operator*(const Integer& k, const Divisor& a);
  friend bool operator==(const Divisor& a, const Divisor& b);
  std::string to_string() const;
};

// CH_0 = Z + Alb.
struct ZeroCycle {
  Integer degree = 0;
  EPoint alb;

  ZeroCycle operator-() const { return {-degree, -alb}; }
  friend ZeroCycle operator+(const ZeroCycle& a, const ZeroCycle& b) {
    return {a.degree + b.degree, a.alb + b.alb};
  }
  friend ZeroCycle operator-(const ZeroCycle& a, const ZeroCycle& b) { return a + (-b); }
  friend ZeroCycle operator*(const Integer& k, const ZeroCycle& a) { return {k * a.degree, k * a.alb}; }
  friend bool operator==(const ZeroCycle& a, const ZeroCycle& b) {
    return a.degree == b.degree && a.alb == b.alb;
  }
  bool is_zero() const { return degree == 0 && alb.is_zero(); }
  std::string to_string() const { return "(" + degree.get_str() + "," + alb.to_string() + ")"; }
};

struct ChowClass {
  Integer fundamental = 0;
  Divisor divisor;
  ZeroCycle zero_cycle;

  friend ChowClass operator+(const ChowClass& a, const ChowClass& b) {
    return {a.fundamental + b.fundamental, a.divisor + b.divisor, a.zero_cycle + b.zero_cycle};
  }
  friend ChowClass operator-(const ChowClass& a, const ChowClass& b) {
    return {a.fundamental - b.fundamental, a.divisor - b.divisor, a.zero_cycle - b.zero_cycle};
  }
  friend bool operator==(const ChowClass& a, const ChowClass& b) {
    return a.fundamental == b.fundamental && a.divisor == b.divisor && a.zero_cycle == b.zero_cycle;
  }
  std::string to_string() const;
};

struct K0Class {
  std::array<Integer, 4> n{0, 0, 0, 0};  // n1..n4
  int n5 = 0, n6 = 0;
  EPoint p, p_prime;

  friend K0Class operator+(const K0Class& a, const K0Class& b);
  friend K0Class operator*(const Integer& k, const K0Class& a);
  friend bool operator==(const K0Class& a, const K0Class& b);
  std::string to_string() const;
};

// Generator indices of CH^1: D1..D4, and 4 for D5.
enum class DivisorGenerator { D1 = 0, D2 = 1, D3 = 2, D4 = 3, D5 = 4 };

class IntersectionTable {
 public:
  // P defaults to (1/4, e).
  explicit IntersectionTable(const Coefficients& g);
  IntersectionTable(const Coefficients& g, const EPoint& half_class);

  const EPoint& half_class() const { return half_; }
  // Di.Dj for distinct i, j in {D1..D4}.
  void set_product(DivisorGenerator i, DivisorGenerator j, const ZeroCycle& value);
  // Di.D5^p = k p in Alb.
  void set_pic0_multiplier(DivisorGenerator i, const Integer& k);

  ZeroCycle product(DivisorGenerator i, DivisorGenerator j) const;
  ZeroCycle intersect(const Divisor& a, const Divisor& b) const;
  const Coefficients& coefficients() const { return g_; }

 private:
  Coefficients g_;
  EPoint half_;
  std::map<std::pair<int, int>, ZeroCycle> cross_;
  std::map<int, Integer> pic0_;
};

using BlockMap = std::function<ZeroCycle(const Divisor&)>;

// H(v) = sum_i H_i(v_i) + sum_{i<j} v_i v_j over the five blocks D1..D4, Pic^0.
class QuasilinearMap {
 public:
  ZeroCycle operator()(const Divisor& v) const;
  const IntersectionTable& table() const { return *table_; }

 private:
  friend QuasilinearMap build_quasilinear(std::vector<BlockMap>, const IntersectionTable&,
                                          std::uint64_t);
  QuasilinearMap(std::vector<BlockMap> blocks, IntersectionTable table)
      : blocks_(std::move(blocks)), table_(std::make_shared<const IntersectionTable>(std::move(table))) {}
  std::vector<BlockMap> blocks_;
  std::shared_ptr<const IntersectionTable> table_;
};

// Each H_i is checked against H_i(a+b) = H_i(a) + H_i(b) + a.b on sampled block elements.
QuasilinearMap build_quasilinear(std::vector<BlockMap> blocks, const IntersectionTable& table,
                                 std::uint64_t seed = 1);
// H_i = 0 except H_2(k D2) = k^2 P.
QuasilinearMap bielliptic_quasilinear(const IntersectionTable& table);

Divisor block_component(const Divisor& v, DivisorGenerator i);

ChowClass chern(const Integer& rank, const Divisor& c1, const ZeroCycle& c2, const QuasilinearMap& h);

ChowClass h_map(const K0Class& k, const IntersectionTable& table);
K0Class h_inverse(const ChowClass& c, const IntersectionTable& table);

EPoint zero_point(const Coefficients& g);
Divisor zero_divisor(const Coefficients& g);
ZeroCycle zero_zero_cycle(const Coefficients& g);
ChowClass zero_chow(const Coefficients& g);
K0Class zero_k0(const Coefficients& g);

}  // namespace cobk
