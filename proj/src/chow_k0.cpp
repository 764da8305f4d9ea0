#include "cobk/chow_k0.hpp"

#include <random>

#include "cobk/errors.hpp"

namespace cobk {

namespace {
int mod2(const Integer& x) { return static_cast<int>(mod_floor(x, 2).get_si()); }
}  // namespace

Divisor Divisor::operator-() const { return {-d1, -d2, d3, d4, -pic0}; }

Divisor operator+(const Divisor& a, const Divisor& b) {
  return {a.d1 + b.d1, a.d2 + b.d2, (a.d3 + b.d3) % 2, (a.d4 + b.d4) % 2, a.pic0 + b.pic0};
}

Divisor operator*(const Integer& k, const Divisor& a) {
  return {k * a.d1, k * a.d2, mod2(k * a.d3), mod2(k * a.d4), k * a.pic0};
}

bool operator==(const Divisor& a, const Divisor& b) {
  return a.d1 == b.d1 && a.d2 == b.d2 && a.d3 == b.d3 && a.d4 == b.d4 && a.pic0 == b.pic0;
}

std::string Divisor::to_string() const {
  return "(" + d1.get_str() + "," + d2.get_str() + "," + std::to_string(d3) + "," +
         std::to_string(d4) + "," + pic0.to_string() + ")";
}

std::string ChowClass::to_string() const {
  return "(" + fundamental.get_str() + "," + divisor.to_string() + "," + zero_cycle.to_string() + ")";
}

K0Class operator+(const K0Class& a, const K0Class& b) {
  K0Class c;
  for (int i = 0; i < 4; ++i) c.n[i] = a.n[i] + b.n[i];
  c.n5 = (a.n5 + b.n5) % 2;
  c.n6 = (a.n6 + b.n6) % 2;
  c.p = a.p + b.p;
  c.p_prime = a.p_prime + b.p_prime;
  return c;
}

K0Class operator*(const Integer& k, const K0Class& a) {
  K0Class c;
  for (int i = 0; i < 4; ++i) c.n[i] = k * a.n[i];
  c.n5 = mod2(k * a.n5);
  c.n6 = mod2(k * a.n6);
  c.p = k * a.p;
  c.p_prime = k * a.p_prime;
  return c;
}

bool operator==(const K0Class& a, const K0Class& b) {
  return a.n == b.n && a.n5 == b.n5 && a.n6 == b.n6 && a.p == b.p && a.p_prime == b.p_prime;
}

std::string K0Class::to_string() const {
  std::string s = "(";
  for (const auto& x : n) s += x.get_str() + ",";
  return s + std::to_string(n5) + "," + std::to_string(n6) + "," + p.to_string() + "," +
         p_prime.to_string() + ")";
}

EPoint zero_point(const Coefficients& g) { return {CircleValue(), g.zero()}; }
Divisor zero_divisor(const Coefficients& g) { return {0, 0, 0, 0, zero_point(g)}; }
ZeroCycle zero_zero_cycle(const Coefficients& g) { return {0, zero_point(g)}; }
ChowClass zero_chow(const Coefficients& g) { return {0, zero_divisor(g), zero_zero_cycle(g)}; }
K0Class zero_k0(const Coefficients& g) {
  K0Class k;
  k.p = k.p_prime = zero_point(g);
  return k;
}

// ------------------------------------------------------------ table

IntersectionTable::IntersectionTable(const Coefficients& g)
    : IntersectionTable(g, EPoint{CircleValue(1, 4), g.zero()}) {}

IntersectionTable::IntersectionTable(const Coefficients& g, const EPoint& half_class)
    : g_(g), half_(half_class) {
  if (!(Integer(4) * half_).is_zero())
    fail(ErrorCode::InvalidArgument, "the half class P must satisfy 4P = 0");
}

void IntersectionTable::set_product(DivisorGenerator i, DivisorGenerator j, const ZeroCycle& value) {
  int a = static_cast<int>(i), b = static_cast<int>(j);
  if (a == b || a > 3 || b > 3)
    fail(ErrorCode::InvalidArgument, "only cross products of D1..D4 are configurable");
  bool torsion = a >= 2 || b >= 2;
  if (torsion && !(Integer(2) * value).is_zero())
    fail(ErrorCode::InvalidArgument, "products with D3 or D4 must be 2-torsion");
  cross_[{std::min(a, b), std::max(a, b)}] = value;
}

void IntersectionTable::set_pic0_multiplier(DivisorGenerator i, const Integer& k) {
  int a = static_cast<int>(i);
  if (a > 1) fail(ErrorCode::InvalidArgument, "only D1.D5 and D2.D5 are configurable");
  pic0_[a] = k;
}

ZeroCycle IntersectionTable::product(DivisorGenerator i, DivisorGenerator j) const {
  int a = static_cast<int>(i), b = static_cast<int>(j);
  if (a > 3 || b > 3) fail(ErrorCode::InvalidArgument, "use intersect for Pic^0 classes");
  if (a == b) {
    ZeroCycle z = zero_zero_cycle(g_);
    if (a == 1) z.alb = Integer(2) * half_;
    return z;
  }
  auto it = cross_.find({std::min(a, b), std::max(a, b)});
  if (it == cross_.end())
    fail(ErrorCode::MissingTableEntry, "no configured value for D" + std::to_string(std::min(a, b) + 1) +
                                           ".D" + std::to_string(std::max(a, b) + 1));
  return it->second;
}

ZeroCycle IntersectionTable::intersect(const Divisor& x, const Divisor& y) const {
  std::array<Integer, 4> u{x.d1, x.d2, x.d3, x.d4}, v{y.d1, y.d2, y.d3, y.d4};
  ZeroCycle total = zero_zero_cycle(g_);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (u[i] != 0 && v[j] != 0)
        total = total + (u[i] * v[j]) * product(DivisorGenerator(i), DivisorGenerator(j));
  auto pic0_term = [&](const std::array<Integer, 4>& c, const EPoint& p) {
    if (p.is_zero()) return;
    for (int i = 0; i < 4; ++i) {
      if (c[i] == 0 || i > 1) continue;
      auto it = pic0_.find(i);
      if (it == pic0_.end())
        fail(ErrorCode::MissingTableEntry, "no configured value for D" + std::to_string(i + 1) + ".D5");
      total.alb = total.alb + (c[i] * it->second) * p;
    }
  };
  pic0_term(u, y.pic0);
  pic0_term(v, x.pic0);
  return total;
}

// ------------------------------------------------------------ H

Divisor block_component(const Divisor& v, DivisorGenerator i) {
  Divisor out{0, 0, 0, 0, v.pic0 - v.pic0};
  switch (i) {
    case DivisorGenerator::D1: out.d1 = v.d1; break;
    case DivisorGenerator::D2: out.d2 = v.d2; break;
    case DivisorGenerator::D3: out.d3 = v.d3; break;
    case DivisorGenerator::D4: out.d4 = v.d4; break;
    case DivisorGenerator::D5: out.pic0 = v.pic0; break;
  }
  return out;
}

ZeroCycle QuasilinearMap::operator()(const Divisor& v) const {
  ZeroCycle total = zero_zero_cycle(table_->coefficients());
  std::array<Divisor, 5> parts;
  for (int i = 0; i < 5; ++i) {
    parts[i] = block_component(v, DivisorGenerator(i));
    total = total + blocks_[i](parts[i]);
  }
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) total = total + table_->intersect(parts[i], parts[j]);
  return total;
}

namespace {

GroupElement random_element(const Coefficients& g, std::mt19937_64& rng) {
  std::vector<Integer> c;
  const auto& grp = g.group();
  for (std::size_t i = 0; i < grp.num_generators(); ++i) {
    Integer order = grp.generator_order(i);
    long bound = order == 0 ? 7 : order.get_si();
    c.push_back(long(rng() % bound) - (order == 0 ? 3 : 0));
  }
  return g.element(c);
}

Divisor random_block_element(const Coefficients& g, int block, std::mt19937_64& rng) {
  Divisor d = zero_divisor(g);
  long k = long(rng() % 11) - 5;
  switch (block) {
    case 0: d.d1 = k; break;
    case 1: d.d2 = k; break;
    case 2: d.d3 = int(rng() % 2); break;
    case 3: d.d4 = int(rng() % 2); break;
    default: {
      long den = long(rng() % 12) + 1;
      d.pic0 = {CircleValue(make_rational(long(rng() % den), den)), random_element(g, rng)};
    }
  }
  return d;
}

}  // namespace

QuasilinearMap build_quasilinear(std::vector<BlockMap> blocks, const IntersectionTable& table,
                                 std::uint64_t seed) {
  if (blocks.size() != 5) fail(ErrorCode::DimensionMismatch, "one block map per generator block");
  std::mt19937_64 rng(seed);
  const Coefficients& g = table.coefficients();
  for (int i = 0; i < 5; ++i) {
    for (int trial = 0; trial < 16; ++trial) {
      Divisor a = random_block_element(g, i, rng), b = random_block_element(g, i, rng);
      if (!(blocks[i](a + b) == blocks[i](a) + blocks[i](b) + table.intersect(a, b)))
        fail(ErrorCode::BlockMapNotQuasilinear,
             "block " + std::to_string(i + 1) + " fails on " + a.to_string() + ", " + b.to_string());
    }
  }
  return QuasilinearMap(std::move(blocks), table);
}

QuasilinearMap bielliptic_quasilinear(const IntersectionTable& table) {
  const Coefficients g = table.coefficients();
  BlockMap zero = [g](const Divisor&) { return zero_zero_cycle(g); };
  EPoint half = table.half_class();
  BlockMap h2 = [g, half](const Divisor& v) {
    ZeroCycle z = zero_zero_cycle(g);
    z.alb = (v.d2 * v.d2) * half;
    return z;
  };
  return build_quasilinear({zero, h2, zero, zero, zero}, table);
}

ChowClass chern(const Integer& rank, const Divisor& c1, const ZeroCycle& c2, const QuasilinearMap& h) {
  return {rank, c1, h(c1) - c2};
}

ChowClass h_map(const K0Class& k, const IntersectionTable& table) {
  ChowClass c;
  c.fundamental = k.n[0];
  c.divisor = {k.n[2], k.n[3], k.n5, k.n6, k.p};
  c.zero_cycle = {k.n[1], k.n[3] * table.half_class() - k.p_prime};
  return c;
}

K0Class h_inverse(const ChowClass& c, const IntersectionTable& table) {
  K0Class k;
  k.n = {c.fundamental, c.zero_cycle.degree, c.divisor.d1, c.divisor.d2};
  k.n5 = c.divisor.d3;
  k.n6 = c.divisor.d4;
  k.p = c.divisor.pic0;
  k.p_prime = c.divisor.d2 * table.half_class() - c.zero_cycle.alb;
  return k;
}

}  // namespace cobk
