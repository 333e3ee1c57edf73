#ifndef TSYSLAB_RING_HPP
#define TSYSLAB_RING_HPP

#include "tsyslab/algebra.hpp"
#include "tsyslab/shift.hpp"

#include <map>
#include <optional>

namespace tsyslab {

// One formal symbol Q_a(u+s) or Y_a(u+s). The stored shift is always
// canonical for its family (q-component in [0,1)); whole t-periods of a
// Q symbol live in the h_a unit exponents of the enclosing monomial.
struct FormalSymbol {
  Family family;
  int index;
  Shift shift;

  bool operator==(const FormalSymbol &o) const {
    return family == o.family && index == o.index && shift == o.shift;
  }
  bool operator<(const FormalSymbol &o) const {
    if (family != o.family)
      return family < o.family;
    if (index != o.index)
      return index < o.index;
    return shift < o.shift;
  }
};

// Product of symbol powers and unit powers; exponents never zero.
struct Monomial {
  std::map<FormalSymbol, long> syms;
  std::map<int, long> units; // h_a exponents by orbit index

  bool is_empty() const { return syms.empty() && units.empty(); }
  bool operator==(const Monomial &o) const {
    return syms == o.syms && units == o.units;
  }
  bool operator<(const Monomial &o) const {
    if (syms != o.syms)
      return syms < o.syms;
    return units < o.units;
  }
};

// Integer-coefficient Laurent polynomial in Q or Y symbols and units h_a.
// Stored fully canonical: no zero coefficients, no zero exponents, all
// symbol shifts canonical. Symbols of both families never mix in one
// polynomial; arithmetic on mixed operands throws.
class LaurentPoly {
public:
  LaurentPoly() = default;
  explicit LaurentPoly(Int c) {
    if (c != 0)
      terms_.emplace(Monomial{}, std::move(c));
  }
  static LaurentPoly constant(long c) { return LaurentPoly(Int(c)); }

  const std::map<Monomial, Int> &terms() const { return terms_; }
  std::optional<Family> family() const { return family_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_empty() &&
           terms_.begin()->second == 1;
  }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }

  Int coefficient(const Monomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
  }

  // Accumulates c * m, keeping the canonical-form invariants.
  void add_term(const Monomial &m, const Int &c);

  LaurentPoly operator+(const LaurentPoly &o) const;
  LaurentPoly operator-(const LaurentPoly &o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly &o) const;
  LaurentPoly &operator+=(const LaurentPoly &o);
  LaurentPoly &operator-=(const LaurentPoly &o);
  LaurentPoly &operator*=(const LaurentPoly &o) { return *this = *this * o; }

  bool operator==(const LaurentPoly &o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly &o) const { return !(*this == o); }

  // Reciprocal of a single monomial with coefficient +-1.
  LaurentPoly inverse_monomial() const;

private:
  void note_family(const Monomial &m);

  std::map<Monomial, Int> terms_;
  std::optional<Family> family_;
};

inline LaurentPoly operator*(const Int &c, const LaurentPoly &p) {
  return LaurentPoly(c) * p;
}

// The symbol constructor with the paper's boundary conventions applied:
// index 0 is the constant 1; index n+1 is Q_n/Y_n shifted by t/2 for
// A2Even and the constant 1 otherwise; everything is canonicalized,
// emitting h_a units as needed.
LaurentPoly resolve_symbol(const AlgebraSpec &spec, Family family, int a,
                           const Shift &s);

// Q^k_a(u+s) resp. Y^k_a(u+s): product of k symbols at t/r steps.
LaurentPoly power_product(const AlgebraSpec &spec, Family family, int a,
                          int k, const Shift &s);

// Substitution u -> u + d on every symbol, re-canonicalized.
LaurentPoly shift_all(const LaurentPoly &p, const Shift &d);

// Ring homomorphism Y_a(u+s) -> Q_a(u+s-1) / Q_a(u+s+1).
LaurentPoly y_to_q(const LaurentPoly &p);

} // namespace tsyslab

#endif
