#include "cobk/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cobk/errors.hpp"
#include "cobk/snf_kernel.hpp"

namespace cobk {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& text) {
  std::size_t i = 0;
  auto digits = [&](std::string& out) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    out = text.substr(start, i - start);
    return !out.empty();
  };
  std::string sign;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) sign = text[i++] == '-' ? "-" : "";
  std::string num, den = "1";
  if (!digits(num)) fail(ErrorCode::InvalidArgument, "not a rational: '" + text + "'");
  if (i < text.size() && text[i] == '/') {
    ++i;
    if (!digits(den)) fail(ErrorCode::InvalidArgument, "not a rational: '" + text + "'");
  }
  if (i != text.size()) fail(ErrorCode::InvalidArgument, "not a rational: '" + text + "'");
  return make_rational(Integer(sign + num), Integer(den));
}

Integer floor_of(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// ---------------------------------------------------------------- matrices

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    fail(ErrorCode::InvalidArgument, "entry count differs from rows*cols");
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(ErrorCode::InvalidArgument, "ragged matrix literal");
    for (long x : r) entries_.emplace_back(x);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<Integer> IntegerMatrix::column(std::size_t j) const {
  std::vector<Integer> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<Integer> IntegerMatrix::apply(const std::vector<Integer>& x) const {
  if (x.size() != cols_) fail(ErrorCode::DimensionMismatch, "matrix-vector size");
  std::vector<Integer> y(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix product");
  IntegerMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Integer determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "determinant of non-square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) return false;
  Integer d = determinant(m);
  return d == 1 || d == -1;
}

IntegerMatrix inverse_unimodular(const IntegerMatrix& m) {
  if (!is_unimodular(m)) fail(ErrorCode::InvalidArgument, "matrix is not unimodular");
  const std::size_t n = m.rows();
  std::vector<Rational> a(n * 2 * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * 2 * n + j] = m(i, j);
    a[i * 2 * n + n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p * 2 * n + c] == 0) ++p;
    for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a[c * 2 * n + j], a[p * 2 * n + j]);
    Rational piv = a[c * 2 * n + c];
    for (std::size_t j = 0; j < 2 * n; ++j) a[c * 2 * n + j] /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i * 2 * n + c] == 0) continue;
      Rational f = a[i * 2 * n + c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i * 2 * n + j] -= f * a[c * 2 * n + j];
    }
  }
  IntegerMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a[i * 2 * n + n + j].get_num();
  return inv;
}

std::string to_string(const IntegerMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

SmithForm smith_normal_form(const IntegerMatrix& m) {
  SmithForm f{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols())};
  std::vector<Integer> s = f.S.entries(), u = f.U.entries(), v = f.V.entries();
  detail::snf_in_place(s.data(), m.rows(), m.cols(), u.data(), v.data());
  f.S = IntegerMatrix(m.rows(), m.cols(), std::move(s));
  f.U = IntegerMatrix(m.rows(), m.rows(), std::move(u));
  f.V = IntegerMatrix(m.cols(), m.cols(), std::move(v));
  return f;
}

// ------------------------------------------------------------------ groups

FGAbelianGroup::FGAbelianGroup(std::size_t free_rank, std::vector<Integer> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) fail(ErrorCode::InvalidArgument, "invariant factor below 2");
    if (i && torsion_[i] % torsion_[i - 1] != 0)
      fail(ErrorCode::InvalidArgument, "invariant factors do not form a divisibility chain");
  }
}

FGAbelianGroup FGAbelianGroup::cyclic(const Integer& order) {
  if (order == 0) return free(1);
  if (order == 1) return {};
  return FGAbelianGroup(0, {abs(order)});
}

Integer FGAbelianGroup::generator_order(std::size_t i) const {
  if (i >= num_generators()) fail(ErrorCode::InvalidArgument, "generator index out of range");
  return i < free_rank_ ? Integer(0) : torsion_[i - free_rank_];
}

Integer FGAbelianGroup::cardinality() const {
  if (!is_finite()) fail(ErrorCode::InvalidArgument, "infinite group has no cardinality");
  Integer c = 1;
  for (const auto& d : torsion_) c *= d;
  return c;
}

std::string FGAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string s;
  if (free_rank_ == 1) s = "Z";
  else if (free_rank_ > 1) s = "Z^" + std::to_string(free_rank_);
  for (const auto& d : torsion_) s += (s.empty() ? "Z/" : " + Z/") + d.get_str();
  return s;
}

// ---------------------------------------------------------------- elements

namespace {
const std::shared_ptr<const FGAbelianGroup>& trivial_group() {
  static const auto g = std::make_shared<const FGAbelianGroup>();
  return g;
}
}  // namespace

GroupElement::GroupElement() : parent_(trivial_group()) {}

GroupElement::GroupElement(const FGAbelianGroup& parent, std::vector<Integer> coords)
    : GroupElement(std::make_shared<const FGAbelianGroup>(parent), std::move(coords)) {}

GroupElement::GroupElement(std::shared_ptr<const FGAbelianGroup> parent,
                           std::vector<Integer> coords)
    : parent_(std::move(parent)), coords_(std::move(coords)) {
  if (coords_.size() != parent_->num_generators())
    fail(ErrorCode::DimensionMismatch, "coordinate count differs from generator count");
  reduce();
}

GroupElement GroupElement::zero(const FGAbelianGroup& parent) {
  return GroupElement(parent, std::vector<Integer>(parent.num_generators(), Integer(0)));
}

GroupElement GroupElement::generator(const FGAbelianGroup& parent, std::size_t i) {
  std::vector<Integer> c(parent.num_generators(), Integer(0));
  if (i >= c.size()) fail(ErrorCode::InvalidArgument, "generator index out of range");
  c[i] = 1;
  return GroupElement(parent, std::move(c));
}

void GroupElement::reduce() {
  const auto& t = parent_->torsion();
  for (std::size_t i = 0; i < t.size(); ++i) {
    Integer& c = coords_[parent_->free_rank() + i];
    c = mod_floor(c, t[i]);
  }
}

void GroupElement::check_same_parent(const GroupElement& o) const {
  if (parent_ != o.parent_ && !(*parent_ == *o.parent_))
    fail(ErrorCode::DimensionMismatch, "elements of different groups");
}

bool GroupElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& x) { return x == 0; });
}

Integer GroupElement::order() const {
  Integer o = 1;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    if (i < parent_->free_rank()) return 0;
    Integer d = parent_->torsion()[i - parent_->free_rank()];
    Integer g = gcd(d, coords_[i]);
    Integer oi = d / g;
    o = lcm(o, oi);
  }
  return o;
}

GroupElement GroupElement::operator-() const {
  GroupElement r = *this;
  for (auto& c : r.coords_) c = -c;
  r.reduce();
  return r;
}

GroupElement& GroupElement::operator+=(const GroupElement& o) {
  check_same_parent(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  reduce();
  return *this;
}

GroupElement& GroupElement::operator-=(const GroupElement& o) {
  check_same_parent(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  reduce();
  return *this;
}

GroupElement operator*(const Integer& k, const GroupElement& a) {
  GroupElement r = a;
  for (auto& c : r.coords_) c *= k;
  r.reduce();
  return r;
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  a.check_same_parent(b);
  return a.coords_ == b.coords_;
}

bool operator<(const GroupElement& a, const GroupElement& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

std::string GroupElement::to_string() const {
  if (is_zero()) return "e";
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? "," : "") + coords_[i].get_str();
  return s + "]";
}

CircleValue::CircleValue(const Rational& v) {
  Rational c = v;
  c.canonicalize();
  value_ = c - Rational(floor_of(c));
}

// ------------------------------------------------------------------ homs

namespace {
void reduce_rows(IntegerMatrix& m, const FGAbelianGroup& codomain) {
  for (std::size_t i = codomain.free_rank(); i < codomain.num_generators(); ++i) {
    Integer d = codomain.generator_order(i);
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = mod_floor(m(i, j), d);
  }
}
}  // namespace

GroupHom::GroupHom(FGAbelianGroup domain, FGAbelianGroup codomain, IntegerMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != codomain_.num_generators() || matrix_.cols() != domain_.num_generators())
    fail(ErrorCode::DimensionMismatch, "homomorphism matrix shape");
  reduce_rows(matrix_, codomain_);
  for (std::size_t j = domain_.free_rank(); j < domain_.num_generators(); ++j) {
    std::vector<Integer> col = matrix_.column(j);
    for (auto& c : col) c *= domain_.generator_order(j);
    if (!GroupElement(codomain_, col).is_zero())
      fail(ErrorCode::InvalidArgument, "matrix does not respect torsion of the domain");
  }
}

GroupHom GroupHom::identity(const FGAbelianGroup& g) {
  return GroupHom(g, g, IntegerMatrix::identity(g.num_generators()));
}

GroupHom GroupHom::zero(const FGAbelianGroup& domain, const FGAbelianGroup& codomain) {
  return GroupHom(domain, codomain, IntegerMatrix(codomain.num_generators(), domain.num_generators()));
}

GroupHom GroupHom::scalar(const FGAbelianGroup& g, const Integer& n) {
  IntegerMatrix m = IntegerMatrix::identity(g.num_generators());
  for (std::size_t i = 0; i < g.num_generators(); ++i) m(i, i) = n;
  return GroupHom(g, g, m);
}

GroupElement GroupHom::operator()(const GroupElement& x) const {
  if (!(x.parent() == domain_)) fail(ErrorCode::DimensionMismatch, "element outside the domain");
  return GroupElement(codomain_, matrix_.apply(x.coords()));
}

bool GroupHom::is_zero() const { return matrix_.is_zero(); }

bool GroupHom::is_surjective() const { return cokernel(*this).group.is_trivial(); }

bool GroupHom::is_injective() const { return kernel(*this).group.is_trivial(); }

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (!(f.codomain_ == g.domain_)) fail(ErrorCode::DimensionMismatch, "composition of homs");
  return GroupHom(f.domain_, g.codomain_, g.matrix_ * f.matrix_);
}

// --------------------------------------------------------- constructions

Presentation present(const IntegerMatrix& relations) {
  const std::size_t k = relations.rows();
  SmithForm f = smith_normal_form(relations);
  IntegerMatrix uinv = inverse_unimodular(f.U);
  const std::size_t diag = std::min(relations.rows(), relations.cols());
  std::vector<std::size_t> free_rows, torsion_rows;
  std::vector<Integer> torsion;
  for (std::size_t i = 0; i < k; ++i) {
    Integer d = i < diag ? f.S(i, i) : Integer(0);
    if (d == 0) free_rows.push_back(i);
    else if (d > 1) {
      torsion_rows.push_back(i);
      torsion.push_back(d);
    }
  }
  Presentation p{FGAbelianGroup(free_rows.size(), torsion), {}, {}};
  std::vector<std::size_t> order = free_rows;
  order.insert(order.end(), torsion_rows.begin(), torsion_rows.end());
  p.projection = IntegerMatrix(order.size(), k);
  p.lift = IntegerMatrix(k, order.size());
  for (std::size_t g = 0; g < order.size(); ++g)
    for (std::size_t j = 0; j < k; ++j) {
      p.projection(g, j) = f.U(order[g], j);
      p.lift(j, g) = uinv(j, order[g]);
    }
  reduce_rows(p.projection, p.group);
  return p;
}

Canonicalized canonicalize(const std::vector<Integer>& orders) {
  const std::size_t k = orders.size();
  IntegerMatrix rel(k, k);
  for (std::size_t i = 0; i < k; ++i) rel(i, i) = orders[i];
  Presentation p = present(rel);
  return {p.group, p.projection, p.lift};
}

namespace {
IntegerMatrix torsion_relations(const FGAbelianGroup& g) {
  IntegerMatrix r(g.num_generators(), g.torsion().size());
  for (std::size_t i = 0; i < g.torsion().size(); ++i) r(g.free_rank() + i, i) = g.torsion()[i];
  return r;
}

IntegerMatrix hcat(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows() != b.rows()) fail(ErrorCode::DimensionMismatch, "hcat");
  IntegerMatrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

// Basis (as columns) of the integer kernel of m.
IntegerMatrix integer_kernel(const IntegerMatrix& m) {
  SmithForm f = smith_normal_form(m);
  std::size_t rank = 0;
  for (const auto& d : f.diagonal())
    if (d != 0) ++rank;
  IntegerMatrix k(m.cols(), m.cols() - rank);
  for (std::size_t j = rank; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) k(i, j - rank) = f.V(i, j);
  return k;
}

// Basis (as columns) of the lattice spanned by the columns of g.
IntegerMatrix lattice_basis(const IntegerMatrix& g) {
  SmithForm f = smith_normal_form(g);
  IntegerMatrix uinv = inverse_unimodular(f.U);
  std::vector<std::size_t> idx;
  auto d = f.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) idx.push_back(i);
  IntegerMatrix b(g.rows(), idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c)
    for (std::size_t i = 0; i < g.rows(); ++i) b(i, c) = uinv(i, idx[c]) * d[idx[c]];
  return b;
}

}  // namespace

std::optional<std::vector<Integer>> solve_integer(const IntegerMatrix& n,
                                                  const std::vector<Integer>& y);

QuotientResult cokernel(const GroupHom& f) {
  Presentation p = present(hcat(f.matrix(), torsion_relations(f.codomain())));
  return {p.group, GroupHom(f.codomain(), p.group, p.projection)};
}

SubgroupResult kernel(const GroupHom& f) {
  const FGAbelianGroup& a = f.domain();
  const std::size_t n = a.num_generators();
  IntegerMatrix big = integer_kernel(hcat(f.matrix(), torsion_relations(f.codomain())));
  IntegerMatrix gens(n, big.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < big.cols(); ++j) gens(i, j) = big(i, j);
  IntegerMatrix basis = lattice_basis(gens);
  IntegerMatrix dom_rel = torsion_relations(a);
  IntegerMatrix rel(basis.cols(), dom_rel.cols());
  for (std::size_t j = 0; j < dom_rel.cols(); ++j) {
    auto z = solve_integer(basis, dom_rel.column(j));
    if (!z) fail(ErrorCode::InternalInconsistency, "torsion relation outside the kernel lattice");
    for (std::size_t i = 0; i < z->size(); ++i) rel(i, j) = (*z)[i];
  }
  Presentation p = present(rel);
  return {p.group, GroupHom(p.group, a, basis * p.lift)};
}

SubgroupResult n_torsion(const FGAbelianGroup& a, const Integer& n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "n_torsion needs n >= 1");
  std::vector<Integer> orders;
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < a.torsion().size(); ++i) {
    Integer g = gcd(n, a.torsion()[i]);
    if (g > 1) {
      orders.push_back(g);
      positions.push_back(i);
    }
  }
  FGAbelianGroup sub(0, orders);
  IntegerMatrix inc(a.num_generators(), orders.size());
  for (std::size_t c = 0; c < orders.size(); ++c) {
    std::size_t i = positions[c];
    inc(a.free_rank() + i, c) = a.torsion()[i] / orders[c];
  }
  return {sub, GroupHom(sub, a, inc)};
}

std::optional<std::vector<Integer>> solve_integer(const IntegerMatrix& n,
                                                  const std::vector<Integer>& y) {
  SmithForm f = smith_normal_form(n);
  std::vector<Integer> yp = f.U.apply(y);
  std::vector<Integer> w(n.cols(), Integer(0));
  for (std::size_t i = 0; i < yp.size(); ++i) {
    Integer d = i < n.cols() ? f.S(i, i) : Integer(0);
    if (d == 0) {
      if (yp[i] != 0) return std::nullopt;
      continue;
    }
    if (yp[i] % d != 0) return std::nullopt;
    w[i] = yp[i] / d;
  }
  return f.V.apply(w);
}

std::optional<GroupElement> preimage(const GroupHom& f, const GroupElement& y) {
  if (!(y.parent() == f.codomain())) fail(ErrorCode::DimensionMismatch, "element outside the codomain");
  auto sol = solve_integer(hcat(f.matrix(), torsion_relations(f.codomain())), y.coords());
  if (!sol) return std::nullopt;
  std::vector<Integer> x(sol->begin(), sol->begin() + f.domain().num_generators());
  return GroupElement(f.domain(), x);
}

GroupHom inverse(const GroupHom& iso) {
  if (!iso.is_injective()) fail(ErrorCode::InvalidArgument, "inverse of a non-injective map");
  const FGAbelianGroup& b = iso.codomain();
  IntegerMatrix m(iso.domain().num_generators(), b.num_generators());
  for (std::size_t j = 0; j < b.num_generators(); ++j) {
    auto x = preimage(iso, GroupElement::generator(b, j));
    if (!x) fail(ErrorCode::InvalidArgument, "inverse of a non-surjective map");
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = x->coords()[i];
  }
  return GroupHom(b, iso.domain(), m);
}

DirectSum direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b) {
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < a.num_generators(); ++i) orders.push_back(a.generator_order(i));
  for (std::size_t i = 0; i < b.num_generators(); ++i) orders.push_back(b.generator_order(i));
  Canonicalized c = canonicalize(orders);
  const std::size_t na = a.num_generators();
  IntegerMatrix l(c.group.num_generators(), na), r(c.group.num_generators(), b.num_generators());
  for (std::size_t i = 0; i < c.group.num_generators(); ++i) {
    for (std::size_t j = 0; j < na; ++j) l(i, j) = c.to_canonical(i, j);
    for (std::size_t j = 0; j < b.num_generators(); ++j) r(i, j) = c.to_canonical(i, na + j);
  }
  return {c.group, GroupHom(a, c.group, l), GroupHom(b, c.group, r)};
}

}  // namespace cobk
