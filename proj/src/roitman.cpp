#include "cobk/roitman.hpp"

#include <algorithm>
#include <numeric>

#include "cobk/errors.hpp"

namespace cobk {

namespace {

// Sorts indices in place; returns the permutation sign, 0 on a repeated index.
int sort_sign(std::vector<std::size_t>& v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j + 1 < v.size() - i; ++j)
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        sign = -sign;
      }
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] == v[i + 1]) return 0;
  return sign;
}

Rational det(std::vector<RationalVector> m) {
  std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RationalVector>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void check_length(const RationalVector& v, std::size_t dim) {
  if (v.size() != dim) fail(ErrorCode::DimensionMismatch, "vector length differs from the space dimension");
}

}  // namespace

AlternatingForm::AlternatingForm(std::size_t dim, std::size_t arity) : dim_(dim), arity_(arity) {
  if (arity < 1) fail(ErrorCode::InvalidArgument, "arity must be positive");
}

void AlternatingForm::set(std::vector<std::size_t> indices, const Rational& value) {
  if (indices.size() != arity_) fail(ErrorCode::DimensionMismatch, "index count differs from arity");
  for (auto i : indices)
    if (i >= dim_) fail(ErrorCode::DimensionMismatch, "index out of range");
  int s = sort_sign(indices);
  if (s == 0) {
    if (value != 0) fail(ErrorCode::InvalidArgument, "alternating forms vanish on repeated indices");
    return;
  }
  Rational v = s * value;
  if (v == 0)
    terms_.erase(indices);
  else
    terms_[indices] = v;
}

Rational AlternatingForm::coefficient(std::vector<std::size_t> indices) const {
  int s = sort_sign(indices);
  if (s == 0) return 0;
  auto it = terms_.find(indices);
  return it == terms_.end() ? Rational(0) : s * it->second;
}

Rational AlternatingForm::operator()(const std::vector<RationalVector>& vectors) const {
  if (vectors.size() != arity_) fail(ErrorCode::DimensionMismatch, "argument count differs from arity");
  for (const auto& v : vectors) check_length(v, dim_);
  Rational total = 0;
  for (const auto& [idx, c] : terms_) {
    std::vector<RationalVector> m(arity_, RationalVector(arity_));
    for (std::size_t a = 0; a < arity_; ++a)
      for (std::size_t b = 0; b < arity_; ++b) m[a][b] = vectors[a][idx[b]];
    total += c * det(std::move(m));
  }
  return total;
}

RationalVector AlternatingForm::contract(const std::vector<RationalVector>& fixed) const {
  if (fixed.size() + 1 != arity_) fail(ErrorCode::DimensionMismatch, "contraction needs arity - 1 vectors");
  for (const auto& v : fixed) check_length(v, dim_);
  RationalVector out(dim_, Rational(0));
  std::size_t q = arity_;
  for (const auto& [idx, c] : terms_) {
    for (std::size_t p = 0; p < q; ++p) {
      std::vector<RationalVector> minor(q - 1, RationalVector(q - 1));
      for (std::size_t a = 0; a + 1 < q; ++a)
        for (std::size_t b = 0, col = 0; b < q; ++b)
          if (b != p) minor[a][col++] = fixed[a][idx[b]];
      Rational d = det(std::move(minor));
      if ((q - 1 + p) % 2) d = -d;
      out[idx[p]] += c * d;
    }
  }
  return out;
}

AlternatingForm AlternatingForm::symplectic(std::size_t half_dim) {
  AlternatingForm f(2 * half_dim, 2);
  for (std::size_t i = 0; i < half_dim; ++i) f.set({2 * i, 2 * i + 1}, 1);
  return f;
}

AlternatingForm AlternatingForm::torus_cup_product(std::size_t n) {
  AlternatingForm f(n, n);
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  f.set(idx, 1);
  return f;
}

AlternatingForm AlternatingForm::random(std::size_t dim, std::size_t arity, std::mt19937_64& rng) {
  if (dim < arity) fail(ErrorCode::ZeroBlockForm, "no nonzero form of this arity on the block");
  AlternatingForm f(dim, arity);
  while (f.is_zero()) {
    std::vector<bool> pick(dim, false);
    std::fill(pick.begin(), pick.begin() + arity, true);
    std::sort(pick.begin(), pick.end());
    do {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < dim; ++i)
        if (pick[i]) idx.push_back(i);
      f.set(idx, long(rng() % 7) - 3);
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return f;
}

std::size_t GradedSpace::total() const { return std::accumulate(dims.begin(), dims.end(), std::size_t(0)); }

Subspace::Subspace(std::size_t ambient, std::vector<RationalVector> basis)
    : ambient_(ambient), basis_(std::move(basis)) {
  for (const auto& v : basis_) check_length(v, ambient_);
  if (rank(basis_) != basis_.size()) fail(ErrorCode::InvalidArgument, "basis is not linearly independent");
}

std::size_t rank(const std::vector<RationalVector>& vectors) {
  if (vectors.empty()) return 0;
  auto m = vectors;
  return rref(m, m.front().size()).size();
}

std::vector<RationalVector> null_space(const std::vector<RationalVector>& rows, std::size_t dim) {
  auto m = rows;
  auto pivots = rref(m, dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> out;
  for (std::size_t f = 0; f < dim; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(dim, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

AlternatingForm summed_pullback(const GradedSpace& blocks, const std::vector<AlternatingForm>& forms) {
  if (blocks.dims.size() != forms.size() || forms.empty())
    fail(ErrorCode::DimensionMismatch, "one form per block is required");
  std::size_t q = forms.front().arity();
  AlternatingForm omega(blocks.total(), q);
  std::size_t offset = 0;
  for (std::size_t j = 0; j < forms.size(); ++j) {
    const auto& f = forms[j];
    if (f.dim() != blocks.dims[j] || f.arity() != q)
      fail(ErrorCode::DimensionMismatch, "form does not match its block");
    if (f.is_zero()) fail(ErrorCode::ZeroBlockForm, "block form " + std::to_string(j + 1) + " is zero");
    for (const auto& [idx, c] : f.terms()) {
      auto shifted = idx;
      for (auto& i : shifted) i += offset;
      omega.set(shifted, c);
    }
    offset += blocks.dims[j];
  }
  return omega;
}

bool is_isotropic(const Subspace& w, const AlternatingForm& omega) {
  if (w.ambient() != omega.dim()) fail(ErrorCode::DimensionMismatch, "subspace and form live in different spaces");
  std::size_t k = w.dim(), q = omega.arity();
  if (k < q) return true;
  std::vector<bool> pick(k, false);
  std::fill(pick.begin(), pick.begin() + q, true);
  std::sort(pick.begin(), pick.end());
  do {
    std::vector<RationalVector> args;
    for (std::size_t i = 0; i < k; ++i)
      if (pick[i]) args.push_back(w.basis()[i]);
    if (omega(args) != 0) return false;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return true;
}

BoundCheck check_bound(const GradedSpace& blocks, const std::vector<AlternatingForm>& forms,
                       const Subspace& w) {
  AlternatingForm omega = summed_pullback(blocks, forms);
  if (!is_isotropic(w, omega)) fail(ErrorCode::NotIsotropic, "subspace is not isotropic");
  long bound = long(blocks.total()) - long(blocks.dims.size());
  long slack = bound - long(w.dim());
  return {slack >= 0, slack};
}

Subspace random_isotropic(const AlternatingForm& omega, std::mt19937_64& rng, std::size_t max_dim) {
  std::size_t n = omega.dim(), q = omega.arity();
  std::vector<RationalVector> basis;
  while (basis.size() < std::min(max_dim, n)) {
    std::vector<RationalVector> rows;
    if (basis.size() + 1 >= q) {
      std::vector<bool> pick(basis.size(), false);
      std::fill(pick.begin(), pick.begin() + (q - 1), true);
      std::sort(pick.begin(), pick.end());
      do {
        std::vector<RationalVector> fixed;
        for (std::size_t i = 0; i < basis.size(); ++i)
          if (pick[i]) fixed.push_back(basis[i]);
        rows.push_back(omega.contract(fixed));
      } while (std::next_permutation(pick.begin(), pick.end()));
    }
    auto kernel = null_space(rows, n);
    if (rank(kernel) <= basis.size()) break;
    RationalVector v;
    do {
      v.assign(n, Rational(0));
      for (const auto& k : kernel) {
        Rational c = long(rng() % 7) - 3;
        for (std::size_t i = 0; i < n; ++i) v[i] += c * k[i];
      }
      auto trial = basis;
      trial.push_back(v);
      if (rank(trial) == trial.size()) break;
    } while (true);
    basis.push_back(std::move(v));
  }
  return Subspace(n, std::move(basis));
}

}  // namespace cobk
