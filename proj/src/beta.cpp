#include "tsyslab/beta.hpp"

#include "tsyslab/variables.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace tsyslab {

namespace {

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

// Highest orbit index a with the top-term property (the Remark's bound).
int top_term_bound(const AlgebraSpec &spec) {
  switch (spec.kind) {
  case AlgebraKind::A2Even:
  case AlgebraKind::A2Odd:
    return spec.n;
  case AlgebraKind::D2:
    return spec.n - 1;
  case AlgebraKind::D34:
    return 2;
  }
  return 0;
}

} // namespace

bool WeightPoly::all_exponents_integral() const {
  for (const auto &[vec, c] : terms) {
    (void)c;
    for (const Rat &x : vec)
      if (denominator(x) != 1)
        return false;
  }
  return true;
}

Int WeightPoly::coefficient_sum() const {
  Int s = 0;
  for (const auto &[vec, c] : terms) {
    (void)vec;
    s += c;
  }
  return s;
}

WeightPoly beta_project(const AlgebraSpec &spec, const LaurentPoly &p) {
  if (p.family() && *p.family() != Family::Y)
    throw std::invalid_argument("beta projects the Y ring");
  WeightPoly out;
  for (const auto &[m, c] : p.terms()) {
    std::vector<Rat> lambda(spec.n, Rat(0));
    for (const auto &[sym, e] : m.syms)
      lambda[sym.index - 1] += Rat(e, spec.r_orbit(sym.index));
    auto [it, inserted] = out.terms.emplace(std::move(lambda), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        out.terms.erase(it);
    }
  }
  return out;
}

std::string weight_poly_str(const WeightPoly &w) {
  if (w.terms.empty())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto &[vec, c] : w.terms) {
    if (!first)
      out << (c < 0 ? " - " : " + ");
    else if (c < 0)
      out << "-";
    first = false;
    Int mag = c < 0 ? Int(-c) : c;
    bool zero_vec = true;
    for (const Rat &x : vec)
      if (x != 0)
        zero_vec = false;
    if (mag != 1 || zero_vec)
      out << mag.str();
    if (!zero_vec) {
      out << "e^(";
      bool lead = true;
      for (std::size_t a = 0; a < vec.size(); ++a) {
        if (vec[a] == 0)
          continue;
        if (!lead && vec[a] > 0)
          out << "+";
        lead = false;
        if (vec[a] == 1)
          ;
        else if (vec[a] == -1)
          out << "-";
        else
          out << rat_str(vec[a]) << "*";
        out << "L" << a + 1;
      }
      out << ")";
    }
  }
  return out.str();
}

CheckReport check_top_term(const TTable &table) {
  Stopwatch sw;
  const AlgebraSpec &spec = table.spec;
  CheckReport r;
  r.name = "beta-top-term";
  r.param("algebra", kind_name(spec.kind));
  r.param("n", std::to_string(spec.n));
  const int bound = top_term_bound(spec);
  for (int a = 1; a <= bound; ++a) {
    LaurentPoly top = LaurentPoly::constant(1);
    for (int k = 1; k <= a; ++k)
      top *= z_var(spec, VarLabel::plain(k), Shift(Rat(a - 2 * k), Rat(0)));
    if (!top.is_monomial())
      throw std::logic_error("top term is not a monomial");
    const Monomial &mono = top.terms().begin()->first;
    const Int unit = top.terms().begin()->second;

    LaurentPoly Ta = table.T_upper(a);
    bool coeff_one = unit == 1 && Ta.coefficient(mono) == 1;
    r.add("a=" + std::to_string(a) + ": coefficient of prod z_k(u+a-2k)",
          coeff_one);

    WeightPoly top_image = beta_project(spec, top);
    std::vector<Rat> expected(spec.n, Rat(0));
    expected[a - 1] = 1;
    bool fundamental = top_image.terms.size() == 1 &&
                       top_image.terms.begin()->first == expected &&
                       top_image.terms.begin()->second == 1;
    r.add("a=" + std::to_string(a) + ": beta image is e^(Lambda_a)",
          fundamental);

    WeightPoly image = beta_project(spec, Ta);
    r.add("a=" + std::to_string(a) + ": beta(T^a) integral",
          image.all_exponents_integral());

    bool positive = true;
    for (const auto &[vec, c] : image.terms) {
      (void)vec;
      if (c < 1)
        positive = false;
    }
    auto &soft = r.add("a=" + std::to_string(a) + ": beta coefficients positive",
                       positive);
    soft.soft = true;
  }
  r.wall_ms = sw.ms();
  return r;
}

} // namespace tsyslab
