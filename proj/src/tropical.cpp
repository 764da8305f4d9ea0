#include "cobk/tropical.hpp"

#include <algorithm>

#include "cobk/errors.hpp"

namespace cobk {

Mat2 Mat2::inverse() const {
  Rational d = det();
  if (d == 0) fail(ErrorCode::InvalidArgument, "singular 2x2 matrix");
  return {{a[3] / d, -a[1] / d, -a[2] / d, a[0] / d}};
}

bool Mat2::is_integral() const {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x.get_den() == 1; });
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
  return r;
}

Lattice2::Lattice2(const Mat2& b) : basis(b) {
  if (b.det() == 0) fail(ErrorCode::InvalidArgument, "degenerate lattice basis");
}

bool Lattice2::contains(const Vec2& v) const {
  Vec2 k = basis.inverse() * v;
  return k[0].get_den() == 1 && k[1].get_den() == 1;
}

bool Lattice2::operator==(const Lattice2& o) const {
  Mat2 t = basis.inverse() * o.basis;
  return t.is_integral() && (t.det() == 1 || t.det() == -1);
}

Vec2 AffineInvolution::operator()(const Vec2& p) const {
  Vec2 q = linear * p;
  return {q[0] + translation[0], q[1] + translation[1]};
}

const char* family_name(KleinFamily f) { return f == KleinFamily::K1 ? "K1" : "K2"; }

namespace {

const AffineInvolution kStandardGlide{{{1, 0, 0, -1}}, {Rational(1, 2), Rational(0)}};

// Primitive integer vector spanning the kernel of a rank-1 integral matrix.
Vec2 primitive_kernel(const Mat2& m) {
  Vec2 v{m(0, 1), -m(0, 0)};
  if (v[0] == 0 && v[1] == 0) v = {m(1, 1), -m(1, 0)};
  Integer g = gcd(v[0].get_num(), v[1].get_num());
  return {v[0] / g, v[1] / g};
}

// Smallest positive lattice vector on the given coordinate axis.
Vec2 axis_generator(const Mat2& basis, int axis) {
  int other = 1 - axis;
  // integer k with (basis * k)[other] = 0
  Rational p = basis(other, 0), q = basis(other, 1);
  Integer den = lcm(p.get_den(), q.get_den());
  Integer a = Rational(p * den).get_num(), b = Rational(q * den).get_num();
  Integer g = gcd(a, b);
  Vec2 k{Rational(b / g), Rational(-a / g)};
  if (a == 0 && b == 0) fail(ErrorCode::InternalInconsistency, "degenerate lattice");
  Vec2 v = basis * k;
  if (v[axis] < 0) v = {-v[0], -v[1]};
  return v;
}

TropicalKlein classify(const Mat2& affine_basis) {
  Vec2 l1 = axis_generator(affine_basis, 0);
  Vec2 l2 = axis_generator(affine_basis, 1);
  Rational index = (Mat2::from_columns(l1, l2).det() / affine_basis.det());
  if (index < 0) index = -index;
  if (index == 1) return {KleinFamily::K1, Lattice2(Mat2::from_columns(l1, l2)), kStandardGlide};
  if (index == 2) {
    Vec2 h{(l1[0] + l2[0]) / 2, (l1[1] + l2[1]) / 2};
    return {KleinFamily::K2, Lattice2(Mat2::from_columns(l1, h)), kStandardGlide};
  }
  fail(ErrorCode::InternalInconsistency, "axis sublattice of unexpected index");
}

}  // namespace

TropicalKlein standardize(const Lattice2& lattice, const AffineInvolution& involution) {
  const Mat2& a = involution.linear;
  if (!a.is_integral()) fail(ErrorCode::InvalidArgument, "linear part is not integral");
  if (a.det() == 1) fail(ErrorCode::NotOrientationReversing, "det A = 1");
  if (a.det() != -1) fail(ErrorCode::InvalidArgument, "linear part is not in GL(2,Z)");
  const Mat2& b = lattice.basis;
  Mat2 binv = b.inverse();
  Mat2 aq = binv * a * b;
  if (!aq.is_integral()) fail(ErrorCode::LatticeNotInvariant, "A does not preserve the lattice");
  if (!(a * a == Mat2::identity())) fail(ErrorCode::NotAnInvolution, "A^2 != I");
  Vec2 cq = binv * involution.translation;
  Vec2 twice = aq * cq;
  twice = {twice[0] + cq[0], twice[1] + cq[1]};
  if (twice[0].get_den() != 1 || twice[1].get_den() != 1)
    fail(ErrorCode::NotAnInvolution, "the involution does not square into the lattice");

  Mat2 minus_id = aq, plus_id = aq;
  for (int i = 0; i < 2; ++i) {
    minus_id(i, i) -= 1;
    plus_id(i, i) += 1;
  }
  Mat2 mt = {{minus_id(0, 0), minus_id(1, 0), minus_id(0, 1), minus_id(1, 1)}};
  Vec2 phi = primitive_kernel(mt);
  Rational pc = phi[0] * cq[0] + phi[1] * cq[1];
  if (pc.get_den() == 1) fail(ErrorCode::HasFixedPoints, "the involution has fixed points");

  Vec2 u = primitive_kernel(minus_id);
  Vec2 w = primitive_kernel(plus_id);
  Mat2 p = Mat2::from_columns(u, w);
  if (p.det() != 1 && p.det() != -1)
    fail(ErrorCode::InternalInconsistency, "eigenvectors do not form a basis");
  return classify((b * p).inverse());
}

TropicalKlein standard_klein(const Lattice2& affine_structure) {
  const Mat2& n = affine_structure.basis;
  Mat2 flip{{1, 0, 0, -1}};
  if (!(Lattice2(flip * n) == affine_structure))
    fail(ErrorCode::LatticeNotInvariant, "lattice not symmetric under (x,y) -> (x,-y)");
  return classify(n);
}

std::pair<Lattice2, AffineInvolution> input_form(const TropicalKlein& k) {
  Mat2 n = k.lattice.basis;
  Mat2 ninv = n.inverse();
  return {Lattice2(ninv),
          AffineInvolution{ninv * k.involution.linear * n, ninv * k.involution.translation}};
}

SectionClass::SectionClass(Integer m_, Integer n_, int l_, CircleValue theta_)
    : m(std::move(m_)), n(std::move(n_)), l(((l_ % 2) + 2) % 2), theta(std::move(theta_)) {}

QuadraticSection section_representative(const SectionClass& s) {
  return {Rational(s.m) / 2, Rational(s.n) / 2, make_rational(s.l, 2), s.theta.value()};
}

// ---------------------------------------------------------------- PL maps

PLFunction1D::PLFunction1D() : slopes_{Integer(0)} {}

PLFunction1D::PLFunction1D(std::vector<Rational> cuts, std::vector<Integer> slopes,
                           Integer slope_shift)
    : cuts_(std::move(cuts)), slopes_(std::move(slopes)), shift_(std::move(slope_shift)) {
  if (slopes_.size() != cuts_.size() + 1)
    fail(ErrorCode::InvalidArgument, "need one slope per interval");
  for (std::size_t i = 0; i < cuts_.size(); ++i) {
    if (cuts_[i] <= 0 || cuts_[i] >= 1) fail(ErrorCode::InvalidArgument, "cut outside (0,1)");
    if (i && cuts_[i] <= cuts_[i - 1]) fail(ErrorCode::InvalidArgument, "cuts not increasing");
  }
  simplify();
}

void PLFunction1D::simplify() {
  std::vector<Rational> c;
  std::vector<Integer> s{slopes_[0]};
  for (std::size_t i = 0; i < cuts_.size(); ++i) {
    if (slopes_[i + 1] == s.back()) continue;
    c.push_back(cuts_[i]);
    s.push_back(slopes_[i + 1]);
  }
  cuts_ = std::move(c);
  slopes_ = std::move(s);
}

PLFunction1D PLFunction1D::frak_f() { return PLFunction1D({Rational(1, 2)}, {0, 1}, 1); }

PLFunction1D PLFunction1D::frak_f_phi(const CircleValue& phi) {
  if (phi.is_zero()) return PLFunction1D();
  return PLFunction1D({1 - phi.value()}, {0, 1}, 0);
}

std::size_t PLFunction1D::interval(const Rational& r) const {
  return std::upper_bound(cuts_.begin(), cuts_.end(), r) - cuts_.begin();
}

std::vector<Rational> PLFunction1D::breakpoints() const {
  std::vector<Rational> b;
  if (jump_at(0) != 0) b.push_back(0);
  b.insert(b.end(), cuts_.begin(), cuts_.end());
  return b;
}

Integer PLFunction1D::jump_at(const Rational& x) const {
  Rational r = CircleValue(x).value();
  if (r == 0) return slopes_.front() - (slopes_.back() - shift_);
  auto it = std::lower_bound(cuts_.begin(), cuts_.end(), r);
  if (it == cuts_.end() || *it != r) return 0;
  std::size_t i = it - cuts_.begin();
  return slopes_[i + 1] - slopes_[i];
}

Rational PLFunction1D::drift() const {
  Rational total = 0, left = 0;
  for (std::size_t i = 0; i < slopes_.size(); ++i) {
    Rational right = i < cuts_.size() ? cuts_[i] : Rational(1);
    total += Rational(slopes_[i]) * (right - left);
    left = right;
  }
  return total;
}

Rational PLFunction1D::operator()(const Rational& x) const {
  Integer k = floor_of(x);
  Rational r = x - Rational(k);
  Rational fr = 0, left = 0;
  for (std::size_t i = 0; i < slopes_.size(); ++i) {
    Rational right = i < cuts_.size() ? cuts_[i] : Rational(1);
    if (r <= left) break;
    Rational upto = r < right ? r : right;
    fr += Rational(slopes_[i]) * (upto - left);
    left = right;
  }
  Rational kk(k);
  return fr + kk * drift() + Rational(shift_) * (kk * r + kk * (kk - 1) / 2);
}

Integer PLFunction1D::right_slope(const Rational& x) const {
  Integer k = floor_of(x);
  return slopes_[interval(x - Rational(k))] + shift_ * k;
}

PLFunction1D operator+(const PLFunction1D& f, const PLFunction1D& g) {
  std::vector<Rational> cuts = f.cuts_;
  cuts.insert(cuts.end(), g.cuts_.begin(), g.cuts_.end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Integer> slopes;
  slopes.push_back(f.right_slope(0) + g.right_slope(0));
  for (const auto& c : cuts) slopes.push_back(f.right_slope(c) + g.right_slope(c));
  return PLFunction1D(cuts, slopes, f.shift_ + g.shift_);
}

PLFunction1D operator*(const Integer& k, const PLFunction1D& f) {
  std::vector<Integer> s = f.slopes_;
  for (auto& x : s) x *= k;
  return PLFunction1D(f.cuts_, s, k * f.shift_);
}

std::pair<PLFunction1D, PLFunction1D> pl_approximation(const SectionClass& s) {
  PLFunction1D fx = s.m * PLFunction1D::frak_f() + PLFunction1D::frak_f_phi(s.theta);
  PLFunction1D fy =
      s.n * PLFunction1D::frak_f() + PLFunction1D::frak_f_phi(CircleValue(make_rational(s.l, 2)));
  return {fx, fy};
}

bool satisfies_periodicity(const PLFunction1D& f, const Integer& m, const Rational& phi,
                           bool with_reflection) {
  std::vector<Rational> pts;
  std::vector<Rational> base = f.cuts();
  base.push_back(0);
  for (int j = -4; j <= 4; ++j)
    for (const auto& b : base) {
      pts.push_back(b + j);
      pts.push_back(-(b + j));
    }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Rational> samples;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    samples.push_back(pts[i]);
    if (i + 1 < pts.size()) samples.push_back((pts[i] + pts[i + 1]) / 2);
  }
  Rational half_m = Rational(m) / 2;
  auto h = [&](const Rational& x) -> Rational { return half_m * x * x + phi * x; };
  for (const auto& x : samples) {
    if (x < -3 || x > 3) continue;
    if (f(x) - f(x + 1) != h(x) - h(x + 1)) return false;
    if (with_reflection && f(x) - f(-x) != h(x) - h(-x)) return false;
  }
  return true;
}

Integer TropicalHypersurface::total_weight(Axis axis) const {
  Integer t = 0;
  for (const auto& c : components)
    if (c.axis == axis) t += c.weight;
  return t;
}

TropicalHypersurface bend_locus(const PLFunction1D& f, Axis axis) {
  TropicalHypersurface h;
  for (const auto& b : f.breakpoints()) h.components.push_back({axis, CircleValue(b), f.jump_at(b)});
  return h;
}

AlbaneseData albanese_data(const TropicalKlein& k) {
  if (k.family != KleinFamily::K1)
    fail(ErrorCode::UnsupportedFamily, "the Albanese map is implemented for K1 only");
  Rational a = k.lattice.basis(0, 0);
  Vec2 form{1 / a, 0};
  return {form, form[0] * k.involution.translation[0]};
}

CircleValue alb_zero_cycle(const std::vector<SignedPoint>& points, const TropicalKlein& k) {
  AlbaneseData data = albanese_data(k);
  int degree = 0;
  Rational total = 0;
  for (const auto& p : points) {
    if (p.sign != 1 && p.sign != -1) fail(ErrorCode::InvalidArgument, "sign must be +1 or -1");
    degree += p.sign;
    total += p.sign * (data.form[0] * p.point[0] + data.form[1] * p.point[1]);
  }
  if (degree != 0) fail(ErrorCode::NonzeroDegree, "0-cycle of nonzero degree");
  return CircleValue(total / data.period);
}

}  // namespace cobk
