#include "cobk/brane.hpp"

#include <algorithm>
#include <tuple>

#include "cobk/errors.hpp"

namespace cobk {

Coefficients::Coefficients(const FGAbelianGroup& g)
    : group_(std::make_shared<const FGAbelianGroup>(g)), two_torsion_(n_torsion(g, 2)) {}

GroupElement Coefficients::zero() const {
  return GroupElement(group_, std::vector<Integer>(group_->num_generators(), Integer(0)));
}

GroupElement Coefficients::element(std::vector<Integer> coords) const {
  return GroupElement(group_, std::move(coords));
}

GroupElement Coefficients::generator(std::size_t i) const {
  std::vector<Integer> c(group_->num_generators(), Integer(0));
  if (i >= c.size()) fail(ErrorCode::InvalidArgument, "generator index out of range");
  c[i] = 1;
  return element(std::move(c));
}

std::vector<GroupElement> Coefficients::generators() const {
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < group_->num_generators(); ++i) out.push_back(generator(i));
  return out;
}

std::vector<GroupElement> Coefficients::two_torsion_elements() const {
  const auto& t = two_torsion_.group;
  std::vector<GroupElement> out;
  std::size_t k = t.num_generators();
  for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
    std::vector<Integer> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = (mask >> i) & 1;
    GroupElement x = two_torsion_.inclusion(GroupElement(t, c));
    out.push_back(element(x.coords()));
  }
  return out;
}

namespace {

Rational frac(const Rational& r) { return r - Rational(floor_of(r)); }

void require_two_torsion(const GroupElement& x, const char* what) {
  if (!(Integer(2) * x).is_zero()) fail(ErrorCode::InvalidArgument, std::string(what) + " must be 2-torsion");
}

template <class C>
std::vector<C> merge(std::vector<C> comps) {
  std::sort(comps.begin(), comps.end(), [](const C& a, const C& b) {
    if (!(a.position == b.position)) return a.position < b.position;
    return a.nu < b.nu;
  });
  std::vector<C> out;
  for (auto& c : comps) {
    if (!out.empty() && out.back().position == c.position && out.back().nu == c.nu)
      out.back().weight += c.weight;
    else
      out.push_back(c);
  }
  std::erase_if(out, [](const C& c) { return c.weight == 0; });
  return out;
}

Fiber canonical_fiber(Fiber f) {
  Rational x = frac(f.x), y = frac(f.y);
  if (x >= Rational(1, 2)) {
    x -= Rational(1, 2);
    y = frac(-y);
    f.ly = -f.ly;
  }
  f.x = x;
  f.y = y;
  return f;
}

std::string decorations(const std::vector<std::pair<std::string, GroupElement>>& items) {
  std::string body;
  for (const auto& [k, v] : items) {
    if (v.is_zero()) continue;
    if (!body.empty()) body += ",";
    body += k + "=" + v.to_string();
  }
  return body.empty() ? "" : "{" + body + "}";
}

template <class C>
std::string components(const std::vector<C>& comps) {
  std::string s = "[";
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) s += ",";
    s += comps[i].position.to_string() + ":" + comps[i].weight.get_str() +
         decorations({{"nu", comps[i].nu}});
  }
  return s + "]";
}

}  // namespace

Fiber make_fiber(const Rational& x, const Rational& y, const GroupElement& lx, const GroupElement& ly) {
  return canonical_fiber({x, y, lx, ly});
}

Section make_section(const SectionClass& cls, const GroupElement& eta_z, const GroupElement& eta_z2,
                     int parity) {
  if (parity != 1 && parity != -1) fail(ErrorCode::InvalidArgument, "parity must be +1 or -1");
  require_two_torsion(eta_z2, "eta2");
  return {cls, parity, eta_z, eta_z2};
}

Section zero_section(const Coefficients& g, const GroupElement& h) {
  return make_section(SectionClass(), h, g.zero());
}

LiftX make_lift_x(const Integer& m, const CircleValue& theta, const GroupElement& nu,
                  const GroupElement& eta_z2) {
  require_two_torsion(eta_z2, "eta2");
  auto parts = pl_approximation(SectionClass(m, 0, 0, theta));
  GroupElement e = nu - nu;
  LiftX out{{}, eta_z2};
  for (const auto& c : bend_locus(parts.first).components) {
    Integer sign = c.weight > 0 ? 1 : -1;
    for (Integer i = 0; i < abs(c.weight); ++i) out.components.push_back({c.position, sign, e});
  }
  if (out.components.empty()) {
    if (!nu.is_zero()) fail(ErrorCode::InvalidArgument, "empty lift cannot carry a local system");
    return out;
  }
  auto pos = std::find_if(out.components.begin(), out.components.end(),
                          [](const LiftXComponent& c) { return c.weight > 0; });
  if (pos != out.components.end())
    pos->nu = nu;
  else
    out.components.front().nu = -nu;
  return out;
}

LiftY make_lift_y(const Integer& n, int l, const GroupElement& nu) {
  require_two_torsion(nu, "nu");
  auto parts = pl_approximation(SectionClass(0, n, l, CircleValue()));
  LiftY out;
  GroupElement e = nu - nu;
  bool placed = false;
  for (const auto& c : bend_locus(parts.second, Axis::Y).components) {
    if (c.position == CircleValue(1, 2) && !nu.is_zero()) {
      Integer sign = c.weight > 0 ? 1 : -1;
      out.components.push_back({c.position, c.weight - sign, e});
      out.components.push_back({c.position, sign, nu});
      placed = true;
    } else {
      out.components.push_back({c.position, c.weight, e});
    }
  }
  if (!placed && !nu.is_zero()) {
    out.components.push_back({CircleValue(1, 2), 1, nu});
    out.components.push_back({CircleValue(1, 2), -1, e});
  }
  return out;
}

Brane canonical(const Brane& b) {
  return std::visit(
      [](const auto& x) -> Brane {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Fiber>) {
          return canonical_fiber(x);
        } else if constexpr (std::is_same_v<T, Section>) {
          return make_section(x.cls, x.eta_z, x.eta_z2, x.parity);
        } else if constexpr (std::is_same_v<T, LiftX>) {
          require_two_torsion(x.eta_z2, "eta2");
          return LiftX{merge(x.components), x.eta_z2};
        } else {
          for (const auto& c : x.components) {
            if (!(c.position == CircleValue()) && !(c.position == CircleValue(1, 2)))
              fail(ErrorCode::NotInGeneratorSet, "y-lift bends must sit at 0 or 1/2");
            require_two_torsion(c.nu, "nu");
          }
          return LiftY{merge(x.components)};
        }
      },
      b);
}

std::string to_string(const Brane& b) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Fiber>) {
          return "F(" + to_string(x.x) + "," + to_string(x.y) + ")" +
                 decorations({{"lx", x.lx}, {"ly", x.ly}});
        } else if constexpr (std::is_same_v<T, Section>) {
          std::string s = "Gamma(m=" + x.cls.m.get_str() + ",n=" + x.cls.n.get_str() +
                          ",l=" + std::to_string(x.cls.l) + ",theta=" + x.cls.theta.to_string();
          if (x.parity != 1) s += ",s=-1";
          return s + ")" + decorations({{"eta", x.eta_z}, {"eta2", x.eta_z2}});
        } else if constexpr (std::is_same_v<T, LiftX>) {
          return "Lx" + components(x.components) + decorations({{"eta2", x.eta_z2}});
        } else {
          return "Ly" + components(x.components);
        }
      },
      b);
}

void FormalSum::add(const Brane& b, const Integer& coeff) {
  if (coeff == 0) return;
  Brane c = canonical(b);
  Integer k = coeff;
  if (auto* s = std::get_if<Section>(&c); s && s->parity == -1) {
    s->parity = 1;
    k = -k;
  }
  if (auto* x = std::get_if<LiftX>(&c); x && x->components.empty()) return;
  if (auto* y = std::get_if<LiftY>(&c); y && y->components.empty()) return;
  std::string key = cobk::to_string(c);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), Term{std::move(c), k});
    return;
  }
  it->second.coeff += k;
  if (it->second.coeff == 0) terms_.erase(it);
}

std::vector<FormalSum::Term> FormalSum::terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [k, t] : terms_) out.push_back(t);
  return out;
}

FormalSum& FormalSum::operator+=(const FormalSum& o) {
  for (const auto& [k, t] : o.terms_) add(t.brane, t.coeff);
  return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& o) {
  for (const auto& [k, t] : o.terms_) add(t.brane, -t.coeff);
  return *this;
}

FormalSum operator*(const Integer& k, const FormalSum& a) {
  FormalSum out;
  if (k == 0) return out;
  out.terms_ = a.terms_;
  for (auto& [key, t] : out.terms_) t.coeff *= k;
  return out;
}

bool operator==(const FormalSum& a, const FormalSum& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
    if (i->first != j->first || i->second.coeff != j->second.coeff) return false;
  return true;
}

std::string FormalSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [key, t] : terms_) {
    Integer c = t.coeff;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    Integer a = abs(c);
    if (a != 1) s += a.get_str() + "*";
    s += key;
    first = false;
  }
  return s;
}

}  // namespace cobk
