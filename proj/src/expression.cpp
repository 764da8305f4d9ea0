#include "cobk/expression.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "cobk/errors.hpp"

namespace cobk {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Coefficients& g) : s_(text), g_(g) {}

  FormalSum sum() {
    FormalSum out;
    skip();
    if (peek() == '0' && next_is_end(1)) {
      ++p_;
      expect_end();
      return out;
    }
    int sign = 1;
    if (accept('-'))
      sign = -1;
    else
      accept('+');
    while (true) {
      Integer k = coefficient();
      add_brane(out, sign * k);
      if (accept('+'))
        sign = 1;
      else if (accept('-'))
        sign = -1;
      else
        break;
    }
    expect_end();
    return out;
  }

  std::vector<CircleBrane> t2_sum() {
    std::vector<CircleBrane> out;
    skip();
    int sign = 1;
    if (accept('-'))
      sign = -1;
    else
      accept('+');
    while (true) {
      Integer k = sign * coefficient();
      Direction d;
      if (accept('H'))
        d = Direction::Horizontal;
      else if (accept('V'))
        d = Direction::Vertical;
      else
        error("expected H or V");
      expect('(');
      Rational pos = rational();
      expect(')');
      auto dec = decorations({"g"});
      GroupElement mono = dec.count("g") ? dec.at("g") : g_.zero();
      int unit = k < 0 ? -1 : 1;
      for (Integer i = 0; i < abs(k); ++i) out.push_back({d, CircleValue(pos), mono, unit});
      if (accept('+'))
        sign = 1;
      else if (accept('-'))
        sign = -1;
      else
        break;
    }
    expect_end();
    return out;
  }

  GroupElement group_only() {
    skip();
    GroupElement x = group();
    expect_end();
    return x;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw ParseError(p_, what);
  }

  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  char peek() {
    skip();
    return p_ < s_.size() ? s_[p_] : '\0';
  }
  bool next_is_end(std::size_t offset) {
    std::size_t q = p_ + offset;
    while (q < s_.size() && std::isspace(static_cast<unsigned char>(s_[q]))) ++q;
    return q == s_.size();
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++p_;
    return true;
  }
  bool accept_word(const std::string& w) {
    skip();
    if (s_.compare(p_, w.size(), w) != 0) return false;
    p_ += w.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }
  void expect_end() {
    if (peek() != '\0') error("unexpected trailing input");
  }

  Integer integer() {
    skip();
    std::size_t start = p_;
    if (p_ < s_.size() && (s_[p_] == '-' || s_[p_] == '+')) ++p_;
    std::size_t digits = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (p_ == digits) {
      p_ = start;
      error("expected integer");
    }
    return Integer(s_.substr(start, p_ - start));
  }

  Rational rational() {
    Integer num = integer();
    Integer den = 1;
    if (accept('/')) {
      den = integer();
      if (den == 0) error("zero denominator");
    }
    return make_rational(num, den);
  }

  Integer coefficient() {
    skip();
    if (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) {
      Integer k = integer();
      expect('*');
      return k;
    }
    return 1;
  }

  GroupElement group_term() {
    Integer k = coefficient();
    if (accept('e')) return g_.zero();
    if (accept('g')) {
      std::size_t at = p_;
      Integer i = integer();
      if (i < 1 || i > Integer(g_.group().num_generators())) {
        p_ = at;
        error("generator index out of range");
      }
      return k * g_.generator(i.get_ui() - 1);
    }
    if (accept('[')) {
      std::vector<Integer> c;
      if (!accept(']')) {
        do c.push_back(integer());
        while (accept(','));
        expect(']');
      }
      if (c.size() != g_.group().num_generators()) error("coordinate count differs from the group");
      return k * g_.element(c);
    }
    error("expected group element");
  }

  GroupElement group() {
    GroupElement x = group_term();
    while (true) {
      if (accept('+'))
        x += group_term();
      else if (accept('-'))
        x -= group_term();
      else
        return x;
    }
  }

  std::map<std::string, GroupElement> decorations(const std::vector<std::string>& allowed) {
    std::map<std::string, GroupElement> out;
    if (!accept('{')) return out;
    do {
      std::string key = name();
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) error("unknown local system '" + key + "'");
      expect('=');
      out[key] = group();
    } while (accept(','));
    expect('}');
    return out;
  }

  std::string name() {
    skip();
    std::size_t start = p_;
    while (p_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_')) ++p_;
    if (p_ == start) error("expected name");
    return s_.substr(start, p_ - start);
  }

  std::map<std::string, Rational> keys(const std::vector<std::string>& allowed) {
    std::map<std::string, Rational> out;
    expect('(');
    if (accept(')')) return out;
    do {
      std::string key = name();
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) error("unknown parameter '" + key + "'");
      expect('=');
      out[key] = rational();
    } while (accept(','));
    expect(')');
    return out;
  }

  Integer integral(const std::map<std::string, Rational>& k, const std::string& key, long fallback) {
    auto it = k.find(key);
    if (it == k.end()) return fallback;
    if (it->second.get_den() != 1) error("parameter '" + key + "' must be an integer");
    return it->second.get_num();
  }

  template <class C>
  std::vector<C> components() {
    std::vector<C> out;
    if (accept(']')) return out;
    do {
      Rational pos = rational();
      expect(':');
      Integer w = integer();
      auto dec = decorations({"nu"});
      out.push_back({CircleValue(pos), w, dec.count("nu") ? dec.at("nu") : g_.zero()});
    } while (accept(','));
    expect(']');
    return out;
  }

  GroupElement get(const std::map<std::string, GroupElement>& d, const std::string& key) {
    auto it = d.find(key);
    return it == d.end() ? g_.zero() : it->second;
  }

  void add_brane(FormalSum& out, const Integer& k) {
    std::size_t at = p_;
    try {
      add_brane_inner(out, k);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InvalidArgument) throw;
      p_ = at;
      error(e.what());
    }
  }

  void add_brane_inner(FormalSum& out, const Integer& k) {
    if (accept_word("Gamma")) {
      auto kv = keys({"m", "n", "l", "theta", "s"});
      Integer s = integral(kv, "s", 1);
      if (s != 1 && s != -1) error("s must be 1 or -1");
      SectionClass cls(integral(kv, "m", 0), integral(kv, "n", 0),
                       static_cast<int>(mod_floor(integral(kv, "l", 0), 2).get_si()),
                       CircleValue(kv.count("theta") ? kv["theta"] : Rational(0)));
      auto dec = decorations({"eta", "eta2"});
      out.add(make_section(cls, get(dec, "eta"), get(dec, "eta2"), static_cast<int>(s.get_si())), k);
    } else if (accept_word("Lx")) {
      if (accept('[')) {
        auto comps = components<LiftXComponent>();
        auto dec = decorations({"eta2"});
        out.add(LiftX{comps, get(dec, "eta2")}, k);
      } else {
        auto kv = keys({"m", "theta"});
        auto dec = decorations({"nu", "eta2"});
        out.add(make_lift_x(integral(kv, "m", 1), CircleValue(kv.count("theta") ? kv["theta"] : Rational(0)),
                            get(dec, "nu"), get(dec, "eta2")),
                k);
      }
    } else if (accept_word("Ly")) {
      if (accept('[')) {
        out.add(LiftY{components<LiftYComponent>()}, k);
      } else {
        auto kv = keys({"n", "l"});
        auto dec = decorations({"nu"});
        out.add(make_lift_y(integral(kv, "n", 1), static_cast<int>(mod_floor(integral(kv, "l", 0), 2).get_si()),
                            get(dec, "nu")),
                k);
      }
    } else if (accept('F')) {
      expect('(');
      Rational x = rational();
      expect(',');
      Rational y = rational();
      expect(')');
      auto dec = decorations({"lx", "ly"});
      out.add(make_fiber(x, y, get(dec, "lx"), get(dec, "ly")), k);
    } else {
      error("expected F, Gamma, Lx or Ly");
    }
  }

  const std::string& s_;
  const Coefficients& g_;
  std::size_t p_ = 0;
};

}  // namespace

FormalSum parse_formal_sum(const std::string& text, const Coefficients& g) { return Parser(text, g).sum(); }

GroupElement parse_group_element(const std::string& text, const Coefficients& g) {
  return Parser(text, g).group_only();
}

std::vector<CircleBrane> parse_t2_sum(const std::string& text, const Coefficients& g) {
  return Parser(text, g).t2_sum();
}

std::string to_string(const std::vector<CircleBrane>& sum) {
  if (sum.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < sum.size(); ++i) {
    const auto& b = sum[i];
    if (i || b.sign < 0) s += b.sign < 0 ? (i ? " - " : "-") : " + ";
    s += (b.direction == Direction::Horizontal ? "H(" : "V(") + b.position.to_string() + ")";
    if (!b.monodromy.is_zero()) s += "{g=" + b.monodromy.to_string() + "}";
  }
  return s;
}

}  // namespace cobk
