#include "tsyslab/variables.hpp"

#include <stdexcept>

namespace tsyslab {

namespace {

const Rat kHalf(1, 2);
const Rat kThird(1, 3);

Shift at(const Shift &base, long p) { return base + Shift(Rat(p), Rat(0)); }
Shift at(const Shift &base, long p, const Rat &q) {
  return base + Shift(Rat(p), q);
}

LaurentPoly ratio(const LaurentPoly &num, const LaurentPoly &den) {
  return num * den.inverse_monomial();
}

LaurentPoly z_a2even(const AlgebraSpec &s, VarLabel label, const Shift &u) {
  const int n = s.n;
  switch (label.tag) {
  case VarLabel::Plain: {
    int a = label.a;
    if (a < 1 || a > n)
      throw std::out_of_range("z_a defined for 1 <= a <= n");
    return ratio(resolve_symbol(s, Family::Y, a, at(u, a)),
                 resolve_symbol(s, Family::Y, a - 1, at(u, a + 1)));
  }
  case VarLabel::Zero:
    return ratio(resolve_symbol(s, Family::Y, n, at(u, n + 1, kHalf)),
                 resolve_symbol(s, Family::Y, n, at(u, n + 2)));
  case VarLabel::Bar: {
    int a = label.a;
    if (a < 1 || a > n)
      throw std::out_of_range("z_abar defined for 1 <= a <= n");
    return ratio(resolve_symbol(s, Family::Y, a - 1, at(u, 2 * n - a + 2, kHalf)),
                 resolve_symbol(s, Family::Y, a, at(u, 2 * n - a + 3, kHalf)));
  }
  }
  throw std::logic_error("unreachable");
}

LaurentPoly z_a2odd(const AlgebraSpec &s, VarLabel label, const Shift &u) {
  const int n = s.n;
  switch (label.tag) {
  case VarLabel::Plain: {
    int a = label.a;
    if (a < 1 || a > n)
      throw std::out_of_range("z_a defined for 1 <= a <= n");
    if (a < n)
      return ratio(resolve_symbol(s, Family::Y, a, at(u, a)),
                   resolve_symbol(s, Family::Y, a - 1, at(u, a + 1)));
    return ratio(power_product(s, Family::Y, n, 2, at(u, n)),
                 resolve_symbol(s, Family::Y, n - 1, at(u, n + 1)));
  }
  case VarLabel::Bar: {
    int a = label.a;
    if (a < 1 || a > n)
      throw std::out_of_range("z_abar defined for 1 <= a <= n");
    if (a < n)
      return ratio(resolve_symbol(s, Family::Y, a - 1, at(u, 2 * n - a + 1, kHalf)),
                   resolve_symbol(s, Family::Y, a, at(u, 2 * n - a + 2, kHalf)));
    return ratio(resolve_symbol(s, Family::Y, n - 1, at(u, n + 1, kHalf)),
                 power_product(s, Family::Y, n, 2, at(u, n + 2)));
  }
  case VarLabel::Zero:
    throw std::invalid_argument("z_0 exists for a2even only");
  }
  throw std::logic_error("unreachable");
}

LaurentPoly z_d2(const AlgebraSpec &s, VarLabel label, const Shift &u) {
  const int n = s.n;
  switch (label.tag) {
  case VarLabel::Plain: {
    int a = label.a;
    if (a < 1 || a > n + 1)
      throw std::out_of_range("z_a defined for 1 <= a <= n+1");
    if (a <= n)
      return ratio(power_product(s, Family::Y, a, 2, at(u, a)),
                   power_product(s, Family::Y, a - 1, 2, at(u, a + 1)));
    return ratio(resolve_symbol(s, Family::Y, n, at(u, n, kHalf)),
                 resolve_symbol(s, Family::Y, n, at(u, n + 2)));
  }
  case VarLabel::Bar: {
    int a = label.a;
    if (a < 1 || a > n + 1)
      throw std::out_of_range("z_abar defined for 1 <= a <= n+1");
    if (a <= n)
      return ratio(power_product(s, Family::Y, a - 1, 2, at(u, 2 * n - a + 1)),
                   power_product(s, Family::Y, a, 2, at(u, 2 * n - a + 2)));
    return ratio(resolve_symbol(s, Family::Y, n, at(u, n)),
                 resolve_symbol(s, Family::Y, n, at(u, n + 2, kHalf)));
  }
  case VarLabel::Zero:
    throw std::invalid_argument("z_0 exists for a2even only");
  }
  throw std::logic_error("unreachable");
}

LaurentPoly z_d34(const AlgebraSpec &s, VarLabel label, const Shift &u) {
  auto Y1 = [&](long p, Rat q = Rat(0)) {
    return resolve_symbol(s, Family::Y, 1, at(u, p, q));
  };
  auto Y1_3 = [&](long p) { return power_product(s, Family::Y, 1, 3, at(u, p)); };
  auto Y2_3 = [&](long p) { return power_product(s, Family::Y, 2, 3, at(u, p)); };

  if (label.tag == VarLabel::Zero)
    throw std::invalid_argument("z_0 exists for a2even only");
  int a = label.a;
  if (a < 1 || a > 4)
    throw std::out_of_range("d3_4 labels range over 1..4");
  if (label.tag == VarLabel::Plain) {
    switch (a) {
    case 1:
      return Y1(1);
    case 2:
      return ratio(Y2_3(2), Y1(3));
    case 3:
      return Y1_3(3) * Y1(3).inverse_monomial() * Y2_3(4).inverse_monomial();
    case 4:
      return ratio(Y1(3, -kThird), Y1(5, kThird));
    }
  } else {
    switch (a) {
    case 4:
      return ratio(Y1(3, kThird), Y1(5, -kThird));
    case 3:
      return Y1(5) * Y2_3(4) * Y1_3(5).inverse_monomial();
    case 2:
      return ratio(Y1(5), Y2_3(6));
    case 1:
      return Y1(7).inverse_monomial();
    }
  }
  throw std::logic_error("unreachable");
}

} // namespace

LaurentPoly z_var(const AlgebraSpec &spec, VarLabel label, const Shift &base) {
  switch (spec.kind) {
  case AlgebraKind::A2Even:
    return z_a2even(spec, label, base);
  case AlgebraKind::A2Odd:
    return z_a2odd(spec, label, base);
  case AlgebraKind::D2:
    return z_d2(spec, label, base);
  case AlgebraKind::D34:
    return z_d34(spec, label, base);
  }
  throw std::logic_error("unreachable");
}

int x_count(const AlgebraSpec &spec) {
  switch (spec.kind) {
  case AlgebraKind::A2Even:
    return 2 * spec.n + 1;
  case AlgebraKind::A2Odd:
    return 2 * spec.n;
  default:
    throw std::invalid_argument("x variables are defined for the A2 families only");
  }
}

LaurentPoly x_var(const AlgebraSpec &spec, int i, const Shift &base) {
  const int n = spec.n;
  const int count = x_count(spec);
  if (i < 1 || i > count)
    throw std::out_of_range("x index outside 1..N+1");
  if (i <= n)
    return z_var(spec, VarLabel::plain(i), base);
  if (spec.kind == AlgebraKind::A2Even) {
    if (i == n + 1)
      return z_var(spec, VarLabel::zero(), base);
    return z_var(spec, VarLabel::bar(2 * n - i + 2), base);
  }
  return z_var(spec, VarLabel::bar(2 * n - i + 1), base);
}

} // namespace tsyslab
