#ifndef TSYSLAB_VARIABLES_HPP
#define TSYSLAB_VARIABLES_HPP

#include "tsyslab/ring.hpp"

namespace tsyslab {

// Labels of the analytic-Bethe-ansatz variables: z_a, z_abar, and the
// A2Even-only z_0.
struct VarLabel {
  enum Tag { Plain, Bar, Zero } tag;
  int a = 0; // unused for Zero

  static VarLabel plain(int a) { return {Plain, a}; }
  static VarLabel bar(int a) { return {Bar, a}; }
  static VarLabel zero() { return {Zero, 0}; }
};

// The variable as a single Y-monomial with u replaced by u + base.
LaurentPoly z_var(const AlgebraSpec &spec, VarLabel label, const Shift &base);

// Number of x variables (= N+1 for the A2 families).
int x_count(const AlgebraSpec &spec);

// Linear ordering x_1 .. x_{N+1} of the z variables; A2 families only.
LaurentPoly x_var(const AlgebraSpec &spec, int i, const Shift &base);

} // namespace tsyslab

#endif
