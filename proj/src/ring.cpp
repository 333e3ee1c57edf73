#include "tsyslab/ring.hpp"

#include <stdexcept>

namespace tsyslab {

void LaurentPoly::note_family(const Monomial &m) {
  for (const auto &[sym, e] : m.syms) {
    (void)e;
    if (!family_)
      family_ = sym.family;
    else if (*family_ != sym.family)
      throw std::invalid_argument("mixed Q/Y arithmetic");
  }
}

void LaurentPoly::add_term(const Monomial &m, const Int &c) {
  if (c == 0)
    return;
  note_family(m);
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly &o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o) {
  if (family_ && o.family_ && *family_ != *o.family_)
    throw std::invalid_argument("mixed Q/Y arithmetic");
  for (const auto &[m, c] : o.terms_)
    add_term(m, c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto &[m, c] : r.terms_)
    c = -c;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly &o) const {
  return *this + (-o);
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o) {
  return *this += -o;
}

namespace {

Monomial mono_mul(const Monomial &a, const Monomial &b) {
  Monomial r = a;
  for (const auto &[sym, e] : b.syms) {
    long &slot = r.syms[sym];
    slot += e;
    if (slot == 0)
      r.syms.erase(sym);
  }
  for (const auto &[idx, e] : b.units) {
    long &slot = r.units[idx];
    slot += e;
    if (slot == 0)
      r.units.erase(idx);
  }
  return r;
}

} // namespace

LaurentPoly LaurentPoly::operator*(const LaurentPoly &o) const {
  if (family_ && o.family_ && *family_ != *o.family_)
    throw std::invalid_argument("mixed Q/Y arithmetic");
  LaurentPoly r;
  for (const auto &[ma, ca] : terms_)
    for (const auto &[mb, cb] : o.terms_)
      r.add_term(mono_mul(ma, mb), Int(ca * cb));
  return r;
}

LaurentPoly LaurentPoly::inverse_monomial() const {
  if (terms_.size() != 1)
    throw std::invalid_argument("inverse of a non-monomial");
  const auto &[m, c] = *terms_.begin();
  if (c != 1 && c != -1)
    throw std::invalid_argument("inverse of a non-unit coefficient");
  Monomial inv;
  for (const auto &[sym, e] : m.syms)
    inv.syms.emplace(sym, -e);
  for (const auto &[idx, e] : m.units)
    inv.units.emplace(idx, -e);
  LaurentPoly r;
  r.add_term(inv, c);
  return r;
}

LaurentPoly resolve_symbol(const AlgebraSpec &spec, Family family, int a,
                           const Shift &s) {
  if (a < 0 || a > spec.n + 1)
    throw std::out_of_range("symbol index outside 0..n+1");
  if (a == 0)
    return LaurentPoly::constant(1);
  Shift arg = s;
  if (a == spec.n + 1) {
    if (spec.kind != AlgebraKind::A2Even)
      return LaurentPoly::constant(1);
    // Q_{n+1}(u) = Q_n(u + t/2), likewise for Y.
    a = spec.n;
    arg = arg + Shift(Rat(0), Rat(1, 2));
  }
  auto canon = canonicalize(family, arg);
  Monomial m;
  m.syms.emplace(FormalSymbol{family, a, canon.shift}, 1);
  if (canon.unit_power != 0)
    m.units.emplace(a, canon.unit_power);
  LaurentPoly r;
  r.add_term(m, Int(1));
  return r;
}

LaurentPoly power_product(const AlgebraSpec &spec, Family family, int a,
                          int k, const Shift &s) {
  if (k < 1)
    throw std::invalid_argument("power_product: k must be >= 1");
  LaurentPoly r = LaurentPoly::constant(1);
  for (int j = 0; j < k; ++j)
    r *= resolve_symbol(spec, family, a, s + Shift(Rat(0), Rat(j, spec.r)));
  return r;
}

LaurentPoly shift_all(const LaurentPoly &p, const Shift &d) {
  LaurentPoly r;
  for (const auto &[m, c] : p.terms()) {
    Monomial shifted;
    shifted.units = m.units;
    for (const auto &[sym, e] : m.syms) {
      auto canon = canonicalize(sym.family, sym.shift + d);
      long &slot = shifted.syms[FormalSymbol{sym.family, sym.index, canon.shift}];
      slot += e;
      if (slot == 0)
        shifted.syms.erase(FormalSymbol{sym.family, sym.index, canon.shift});
      if (canon.unit_power != 0) {
        long &u = shifted.units[sym.index];
        u += canon.unit_power * e;
        if (u == 0)
          shifted.units.erase(sym.index);
      }
    }
    r.add_term(shifted, c);
  }
  return r;
}

LaurentPoly y_to_q(const LaurentPoly &p) {
  if (p.family() && *p.family() != Family::Y)
    throw std::invalid_argument("y_to_q expects a Y-family polynomial");
  LaurentPoly r;
  const Shift minus_one(Rat(-1), Rat(0));
  const Shift plus_one(Rat(1), Rat(0));
  for (const auto &[m, c] : p.terms()) {
    Monomial img;
    img.units = m.units;
    for (const auto &[sym, e] : m.syms) {
      auto lo = canonicalize(Family::Q, sym.shift + minus_one);
      auto hi = canonicalize(Family::Q, sym.shift + plus_one);
      img.syms[FormalSymbol{Family::Q, sym.index, lo.shift}] += e;
      img.syms[FormalSymbol{Family::Q, sym.index, hi.shift}] -= e;
      long units = (lo.unit_power - hi.unit_power) * e;
      if (units != 0) {
        long &u = img.units[sym.index];
        u += units;
        if (u == 0)
          img.units.erase(sym.index);
      }
    }
    for (auto it = img.syms.begin(); it != img.syms.end();) {
      if (it->second == 0)
        it = img.syms.erase(it);
      else
        ++it;
    }
    r.add_term(img, c);
  }
  return r;
}

} // namespace tsyslab
