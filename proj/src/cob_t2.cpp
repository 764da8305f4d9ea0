#include "cobk/cob_t2.hpp"

#include "cobk/errors.hpp"

namespace cobk {

std::string T2Class::to_string() const {
  return "((" + hx.get_str() + "," + hy.get_str() + ")," + flux.to_string() + "," +
         monodromy.to_string() + ")";
}

namespace {
void check_sign(const CircleBrane& b) {
  if (b.sign != 1 && b.sign != -1) fail(ErrorCode::InvalidArgument, "sign must be +1 or -1");
}
}  // namespace

CircleValue flux(const std::vector<CircleBrane>& sum) {
  Integer hx = 0, hy = 0;
  CircleValue total;
  for (const auto& b : sum) {
    check_sign(b);
    (b.direction == Direction::Horizontal ? hx : hy) += b.sign;
    total -= Integer(b.sign) * b.position;
  }
  if (hx != 0 || hy != 0) fail(ErrorCode::NotNullHomologous, "sum has nonzero homology class");
  return total;
}

T2Class normal_form_t2(const std::vector<CircleBrane>& sum, const FGAbelianGroup& g) {
  T2Class c{0, 0, CircleValue(), GroupElement::zero(g)};
  for (const auto& b : sum) {
    check_sign(b);
    (b.direction == Direction::Horizontal ? c.hx : c.hy) += b.sign;
    c.flux -= Integer(b.sign) * b.position;
    c.monodromy += Integer(b.sign) * b.monodromy;
  }
  return c;
}

std::vector<CircleBrane> realize_t2(const T2Class& c) {
  const GroupElement e = GroupElement::zero(c.monodromy.parent());
  std::vector<CircleBrane> out;
  auto repeat = [&](const Integer& k, Direction d) {
    int s = k < 0 ? -1 : 1;
    for (Integer i = 0; i < abs(k); ++i) out.push_back({d, CircleValue(), e, s});
  };
  repeat(c.hx, Direction::Horizontal);
  repeat(c.hy, Direction::Vertical);
  if (!c.flux.is_zero()) {
    out.push_back({Direction::Horizontal, CircleValue(), e, 1});
    out.push_back({Direction::Horizontal, c.flux, e, -1});
  }
  if (!c.monodromy.is_zero()) {
    out.push_back({Direction::Horizontal, CircleValue(), c.monodromy, 1});
    out.push_back({Direction::Horizontal, CircleValue(), e, -1});
  }
  return out;
}

}  // namespace cobk
