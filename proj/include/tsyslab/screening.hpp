#ifndef TSYSLAB_SCREENING_HPP
#define TSYSLAB_SCREENING_HPP

#include "tsyslab/diffop.hpp"
#include "tsyslab/report.hpp"
#include "tsyslab/ring.hpp"

#include <map>

namespace tsyslab {

// The derivation S_a acting on the Y-Laurent ring, together with the
// formal monomial S_a(u) it multiplies by.
class ScreeningContext {
public:
  ScreeningContext(const AlgebraSpec &spec, int a);

  const AlgebraSpec &spec() const { return spec_; }
  int index() const { return a_; }

  // The formal solution S_a(u+s): prod_b K_ab(u+s) over
  // Q^{r_a}_a(u+s-1) Q^{r_a}_a(u+s+1), a single Q-monomial.
  const LaurentPoly &formal_S(const Shift &s) const;

  // The derivation extended by the Leibniz rule, result in the Q ring.
  LaurentPoly apply(const LaurentPoly &p) const;

private:
  AlgebraSpec spec_;
  int a_;
  mutable std::map<Shift, LaurentPoly> cache_;
};

// S_a(u+2) = A_a(u+1) S_a(u) for every orbit index, exactly.
CheckReport check_S_functional(const AlgebraSpec &spec);

// (S_a . T^b)(u) = 0 for all orbit indices a and 0 <= b <= b_max.
CheckReport check_screening_annihilation(const AlgebraSpec &spec,
                                         const TTable &table, int b_max);

// D3_4: (S_a . H_a)(u) = (S_a . K_a)(u) = 0 for a = 1, 2.
CheckReport check_HK_annihilation();

} // namespace tsyslab

#endif
