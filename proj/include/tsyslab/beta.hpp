#ifndef TSYSLAB_BETA_HPP
#define TSYSLAB_BETA_HPP

#include "tsyslab/diffop.hpp"
#include "tsyslab/report.hpp"

#include <map>
#include <vector>

namespace tsyslab {

// Image of the classical-weight projection: exponent vectors
// (lambda_1..lambda_n) meaning sum lambda_a Lambda_a, with integer
// coefficients.
struct WeightPoly {
  std::map<std::vector<Rat>, Int> terms;

  bool operator==(const WeightPoly &o) const { return terms == o.terms; }
  bool all_exponents_integral() const;
  Int coefficient_sum() const;
};

// beta(Y_a(u)^e) = e^{(e/r_a) Lambda_a}; h units map to 1.
WeightPoly beta_project(const AlgebraSpec &spec, const LaurentPoly &p);

std::string weight_poly_str(const WeightPoly &w);

// Top-term claim: the monomial prod_{k=1..a} z_k(u+a-2k) = Y_a^{r_a}(u)
// appears in T^a(u) with coefficient 1 and beta-image e^{Lambda_a};
// beta(T^a) has integral exponents. Positivity of all beta coefficients
// is reported as a warning-level observation only.
CheckReport check_top_term(const TTable &table);

} // namespace tsyslab

#endif
