#ifndef TSYSLAB_DIFFOP_HPP
#define TSYSLAB_DIFFOP_HPP

#include "tsyslab/report.hpp"
#include "tsyslab/ring.hpp"
#include "tsyslab/variables.hpp"

#include <map>
#include <optional>

namespace tsyslab {

// Graded series sum_a c_a(u) D^a with the commutation rule
// D f(u) = f(u+2) D. Exact when finitely many coefficients are nonzero
// (the A2 L operators); otherwise truncated at a degree cutoff.
struct DiffOperator {
  std::map<int, LaurentPoly> coeffs;
  std::optional<int> cutoff; // nullopt = exact

  bool exact() const { return !cutoff.has_value(); }
  LaurentPoly coeff(int degree) const {
    if (cutoff && degree > *cutoff)
      throw std::out_of_range("coefficient beyond series cutoff");
    auto it = coeffs.find(degree);
    return it == coeffs.end() ? LaurentPoly() : it->second;
  }
  int max_degree() const { return coeffs.empty() ? -1 : coeffs.rbegin()->first; }

  static DiffOperator identity() {
    DiffOperator op;
    op.coeffs.emplace(0, LaurentPoly::constant(1));
    return op;
  }
};

DiffOperator dop_mul(const DiffOperator &a, const DiffOperator &b);
DiffOperator dop_scale(const DiffOperator &a, const Int &c);
bool dop_equal(const DiffOperator &a, const DiffOperator &b, int up_to);

// 1 - z(u) D for a degree-1 factor.
DiffOperator one_minus_zD(const LaurentPoly &z);

// (1 - c(u) D^2)^{-1} = sum_j c(u)c(u+4)...c(u+4(j-1)) D^{2j}, truncated.
DiffOperator geometric_inverse(const LaurentPoly &c, int K);

// The factorized L operator of the given algebra. Exact polynomial of
// degree N+1 for the A2 families (K ignored); truncated at K otherwise.
DiffOperator build_L(const AlgebraSpec &spec, int K);

// A2 rewrite: prod_{a=1}^{N+1} (x_a(u+N+1-2a+t/2) - D), left to right.
DiffOperator build_L_rewritten(const AlgebraSpec &spec);

// Filtration operators L_a = prod_{b=N+2-a}^{N+1} (D - x_b(u+N+1-2b+t/2));
// L_{N+1} = (-1)^{N+1} L.
DiffOperator build_L_filtration(const AlgebraSpec &spec, int a);

// T functions read off the expansions of L and L^{-1}:
// L(u) = sum (-1)^a T^a(u+a) D^a, L(u)^{-1} = sum T_m(u+m) D^m.
struct TTable {
  AlgebraSpec spec;
  std::map<int, LaurentPoly> upper; // a -> T^a(u)
  std::map<int, LaurentPoly> lower; // m -> T_m(u)
  std::optional<int> cutoff;

  LaurentPoly T_upper(int a) const;
  LaurentPoly T_lower(int m) const;
  int lower_max() const { return lower.empty() ? -1 : lower.rbegin()->first; }
};

TTable extract_T(const AlgebraSpec &spec, const DiffOperator &L);

// Fills table.lower up to m_max from the T-T recursion
// T_m(u+m) = sum_{a=1}^{m} (-1)^{a+1} T_{m-a}(u+m+a) T^a(u+a).
void solve_lower(TTable &table, int m_max);

// sum_a y_to_q(c_a(u)) f(u+2a); L must be exact.
LaurentPoly apply_operator(const DiffOperator &L, const LaurentPoly &f);

// D3_4 building blocks H_a(u+base), K_a(u+base) (a = 1, 2).
LaurentPoly d34_H(const AlgebraSpec &spec, int a, const Shift &base);
LaurentPoly d34_K(const AlgebraSpec &spec, int a, const Shift &base);

// The rewritten triple-product form of the D3_4 L operator, truncated.
DiffOperator d34_rewritten_L(const AlgebraSpec &spec, int K);

// Identity checks; each returns a per-item pass/fail report.
CheckReport check_TT2(const TTable &table, int m_max);
CheckReport check_TQ1(const AlgebraSpec &spec, const DiffOperator &L);
CheckReport check_TQ2(const TTable &table);
CheckReport check_duality(const TTable &table);
CheckReport check_rewrite(const AlgebraSpec &spec);
CheckReport check_d34_lemmas(int K);

} // namespace tsyslab

#endif
