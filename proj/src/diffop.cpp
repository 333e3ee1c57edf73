#include "tsyslab/diffop.hpp"

#include "tsyslab/poly_text.hpp"

#include <chrono>
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

Shift sh(long p, Rat q = Rat(0)) { return Shift(Rat(p), std::move(q)); }

const Rat kHalf(1, 2);
const Rat kThird(1, 3);

} // namespace

DiffOperator dop_mul(const DiffOperator &a, const DiffOperator &b) {
  DiffOperator r;
  if (a.cutoff || b.cutoff) {
    int k = a.cutoff.value_or(INT_MAX);
    if (b.cutoff)
      k = std::min(k, *b.cutoff);
    r.cutoff = k;
  }
  for (const auto &[da, ca] : a.coeffs) {
    for (const auto &[db, cb] : b.coeffs) {
      int d = da + db;
      if (r.cutoff && d > *r.cutoff)
        continue;
      LaurentPoly term = ca * shift_all(cb, sh(2 * da));
      if (term.is_zero())
        continue;
      auto [it, inserted] = r.coeffs.emplace(d, term);
      if (!inserted)
        it->second += term;
    }
  }
  for (auto it = r.coeffs.begin(); it != r.coeffs.end();)
    it = it->second.is_zero() ? r.coeffs.erase(it) : std::next(it);
  return r;
}

DiffOperator dop_scale(const DiffOperator &a, const Int &c) {
  DiffOperator r;
  r.cutoff = a.cutoff;
  if (c == 0)
    return r;
  for (const auto &[d, p] : a.coeffs)
    r.coeffs.emplace(d, c * p);
  return r;
}

bool dop_equal(const DiffOperator &a, const DiffOperator &b, int up_to) {
  for (int d = 0; d <= up_to; ++d)
    if (a.coeff(d) != b.coeff(d))
      return false;
  return true;
}

DiffOperator one_minus_zD(const LaurentPoly &z) {
  DiffOperator op = DiffOperator::identity();
  LaurentPoly neg = -z;
  if (!neg.is_zero())
    op.coeffs.emplace(1, neg);
  return op;
}

DiffOperator geometric_inverse(const LaurentPoly &c, int K) {
  if (K < 0)
    throw std::invalid_argument("geometric_inverse: cutoff must be >= 0");
  DiffOperator op;
  op.cutoff = K;
  LaurentPoly running = LaurentPoly::constant(1);
  for (int j = 0; 2 * j <= K; ++j) {
    if (!running.is_zero())
      op.coeffs.emplace(2 * j, running);
    running *= shift_all(c, sh(4 * j));
  }
  return op;
}

namespace {

DiffOperator product(const std::vector<DiffOperator> &factors) {
  DiffOperator acc = DiffOperator::identity();
  for (const auto &f : factors)
    acc = dop_mul(acc, f);
  return acc;
}

} // namespace

DiffOperator build_L(const AlgebraSpec &spec, int K) {
  std::vector<DiffOperator> factors;
  const Shift u0;
  switch (spec.kind) {
  case AlgebraKind::A2Even:
    for (int a = 1; a <= spec.n; ++a)
      factors.push_back(one_minus_zD(z_var(spec, VarLabel::bar(a), u0)));
    factors.push_back(one_minus_zD(z_var(spec, VarLabel::zero(), u0)));
    for (int a = spec.n; a >= 1; --a)
      factors.push_back(one_minus_zD(z_var(spec, VarLabel::plain(a), u0)));
    break;
  case AlgebraKind::A2Odd:
    for (int a = 1; a <= spec.n; ++a)
      factors.push_back(one_minus_zD(z_var(spec, VarLabel::bar(a), u0)));
    for (int a = spec.n; a >= 1; --a)
      factors.push_back(one_minus_zD(z_var(spec, VarLabel::plain(a), u0)));
    break;
  case AlgebraKind::D2:
  case AlgebraKind::D34: {
    if (K < 0)
      throw std::invalid_argument("build_L: series cutoff must be >= 0");
    int top = spec.kind == AlgebraKind::D2 ? spec.n + 1 : 4;
    for (int a = 1; a <= top; ++a)
      factors.push_back(one_minus_zD(z_var(spec, VarLabel::bar(a), u0)));
    LaurentPoly c = z_var(spec, VarLabel::plain(top), u0) *
                    z_var(spec, VarLabel::bar(top), sh(2));
    factors.push_back(geometric_inverse(c, K));
    for (int a = top; a >= 1; --a)
      factors.push_back(one_minus_zD(z_var(spec, VarLabel::plain(a), u0)));
    break;
  }
  }
  return product(factors);
}

DiffOperator build_L_rewritten(const AlgebraSpec &spec) {
  if (!spec.is_A2())
    throw std::invalid_argument("rewritten L exists for the A2 families only");
  const int top = spec.N + 1;
  std::vector<DiffOperator> factors;
  for (int a = 1; a <= top; ++a) {
    DiffOperator f;
    f.coeffs.emplace(0, x_var(spec, a, sh(top - 2 * a, kHalf)));
    f.coeffs.emplace(1, LaurentPoly::constant(-1));
    factors.push_back(f);
  }
  return product(factors);
}

DiffOperator build_L_filtration(const AlgebraSpec &spec, int a) {
  if (!spec.is_A2())
    throw std::invalid_argument("filtration operators exist for the A2 families only");
  const int top = spec.N + 1;
  if (a < 1 || a > top)
    throw std::out_of_range("filtration index outside 1..N+1");
  std::vector<DiffOperator> factors;
  for (int b = top + 1 - a; b <= top; ++b) {
    DiffOperator f;
    f.coeffs.emplace(0, -x_var(spec, b, sh(top - 2 * b, kHalf)));
    f.coeffs.emplace(1, LaurentPoly::constant(1));
    factors.push_back(f);
  }
  return product(factors);
}

LaurentPoly TTable::T_upper(int a) const {
  if (a < 0)
    return LaurentPoly();
  if (a == 0)
    return LaurentPoly::constant(1);
  if (!cutoff && a > spec.N + 1 && spec.is_A2())
    return LaurentPoly();
  if (cutoff && a > *cutoff)
    throw std::out_of_range("T^a beyond series cutoff");
  auto it = upper.find(a);
  return it == upper.end() ? LaurentPoly() : it->second;
}

LaurentPoly TTable::T_lower(int m) const {
  if (m < 0)
    return LaurentPoly();
  if (m == 0)
    return LaurentPoly::constant(1);
  auto it = lower.find(m);
  if (it == lower.end())
    throw std::out_of_range("T_m not solved to this order");
  return it->second;
}

TTable extract_T(const AlgebraSpec &spec, const DiffOperator &L) {
  TTable t;
  t.spec = spec;
  t.cutoff = L.cutoff;
  for (const auto &[a, c] : L.coeffs) {
    LaurentPoly Ta = shift_all(c, sh(-a));
    if (a % 2)
      Ta = -Ta;
    t.upper.emplace(a, std::move(Ta));
  }
  return t;
}

void solve_lower(TTable &table, int m_max) {
  table.lower[0] = LaurentPoly::constant(1);
  for (int m = 1; m <= m_max; ++m) {
    if (table.lower.count(m))
      continue;
    LaurentPoly sum;
    for (int a = 1; a <= m; ++a) {
      LaurentPoly term = shift_all(table.T_lower(m - a), sh(m + a)) *
                         shift_all(table.T_upper(a), sh(a));
      if (a % 2)
        sum += term;
      else
        sum -= term;
    }
    table.lower[m] = shift_all(sum, sh(-m));
  }
}

LaurentPoly apply_operator(const DiffOperator &L, const LaurentPoly &f) {
  if (!L.exact())
    throw std::invalid_argument("apply_operator requires an exact operator");
  if (f.family() && *f.family() != Family::Q)
    throw std::invalid_argument("apply_operator expects a Q-family argument");
  LaurentPoly out;
  for (const auto &[a, c] : L.coeffs)
    out += y_to_q(c) * shift_all(f, sh(2 * a));
  return out;
}

LaurentPoly d34_H(const AlgebraSpec &spec, int a, const Shift &s) {
  if (a == 1)
    return resolve_symbol(spec, Family::Y, 1, s) +
           power_product(spec, Family::Y, 2, 3, s + sh(1)) *
               resolve_symbol(spec, Family::Y, 1, s + sh(2)).inverse_monomial();
  if (a == 2)
    return power_product(spec, Family::Y, 2, 3, s) +
           power_product(spec, Family::Y, 1, 3, s + sh(1)) *
               power_product(spec, Family::Y, 2, 3, s + sh(2)).inverse_monomial();
  throw std::out_of_range("H_a defined for a = 1, 2");
}

LaurentPoly d34_K(const AlgebraSpec &spec, int a, const Shift &s) {
  if (a == 1)
    return resolve_symbol(spec, Family::Y, 1, s).inverse_monomial() +
           resolve_symbol(spec, Family::Y, 1, s + sh(-2)) *
               power_product(spec, Family::Y, 2, 3, s + sh(-1)).inverse_monomial();
  if (a == 2)
    return power_product(spec, Family::Y, 2, 3, s).inverse_monomial() +
           power_product(spec, Family::Y, 2, 3, s + sh(-2)) *
               power_product(spec, Family::Y, 1, 3, s + sh(-1)).inverse_monomial();
  throw std::out_of_range("K_a defined for a = 1, 2");
}

DiffOperator d34_rewritten_L(const AlgebraSpec &spec, int K) {
  auto Y23 = [&spec](long p) {
    return power_product(spec, Family::Y, 2, 3, sh(p));
  };

  DiffOperator left;
  left.coeffs.emplace(0, LaurentPoly::constant(1));
  left.coeffs.emplace(1, -d34_K(spec, 1, sh(7)));
  left.coeffs.emplace(2, Y23(8).inverse_monomial());

  DiffOperator middle;
  middle.cutoff = K;
  middle.coeffs.emplace(0, LaurentPoly::constant(1));
  for (int j = 0; 2 * j + 1 <= K; ++j) {
    LaurentPoly A = d34_K(spec, 1, sh(4 * j + 5, kThird)) *
                    d34_H(spec, 1, sh(3, -kThird));
    if (j > 0)
      A += d34_K(spec, 1, sh(4 * j + 5, -kThird)) *
           d34_H(spec, 1, sh(3, kThird));
    middle.coeffs.emplace(2 * j + 1, -A);
  }
  for (int j = 0; 2 * j + 2 <= K; ++j) {
    LaurentPoly B = d34_K(spec, 1, sh(4 * j + 7, kThird)) *
                        d34_H(spec, 1, sh(3, kThird)) +
                    d34_K(spec, 1, sh(4 * j + 7, -kThird)) *
                        d34_H(spec, 1, sh(3, -kThird));
    if (j == 0)
      B -= Y23(4) * Y23(6).inverse_monomial();
    middle.coeffs.emplace(2 * j + 2, B);
  }

  DiffOperator right;
  right.coeffs.emplace(0, LaurentPoly::constant(1));
  right.coeffs.emplace(1, -d34_H(spec, 1, sh(1)));
  right.coeffs.emplace(2, Y23(2));

  return dop_mul(dop_mul(left, middle), right);
}

CheckReport check_TT2(const TTable &table, int m_max) {
  Stopwatch sw;
  CheckReport r;
  r.name = "tt2";
  r.param("algebra", kind_name(table.spec.kind));
  r.param("n", std::to_string(table.spec.n));
  r.param("m_max", std::to_string(m_max));
  for (int m = 0; m <= m_max; ++m) {
    LaurentPoly sum;
    for (int a = 0; a <= m; ++a) {
      LaurentPoly term = shift_all(table.T_lower(m - a), sh(-m - a)) *
                         shift_all(table.T_upper(a), sh(-a));
      if (a % 2)
        sum -= term;
      else
        sum += term;
    }
    if (m == 0)
      sum -= LaurentPoly::constant(1);
    auto &item = r.add("m=" + std::to_string(m), sum.is_zero());
    if (!item.ok)
      item.detail = "residual: " + to_string(sum);
  }
  r.wall_ms = sw.ms();
  return r;
}

CheckReport check_TQ1(const AlgebraSpec &spec, const DiffOperator &L) {
  Stopwatch sw;
  CheckReport r;
  r.name = "tq1";
  r.param("algebra", kind_name(spec.kind));
  r.param("n", std::to_string(spec.n));
  LaurentPoly q1 = power_product(spec, Family::Q, 1, spec.r_orbit(1), Shift());
  LaurentPoly residual = apply_operator(L, q1);
  auto &item = r.add("L(u) Q_1^{r_1}(u) = 0", residual.is_zero());
  if (!item.ok)
    item.detail = "residual: " + to_string(residual);
  r.wall_ms = sw.ms();
  return r;
}

CheckReport check_TQ2(const TTable &table) {
  Stopwatch sw;
  const AlgebraSpec &spec = table.spec;
  CheckReport r;
  r.name = "tq2";
  r.param("algebra", kind_name(spec.kind));
  r.param("n", std::to_string(spec.n));
  if (!spec.is_A2())
    throw std::invalid_argument("tq2 applies to the A2 families only");
  LaurentPoly sum;
  for (int a = 0; a <= spec.N + 1; ++a) {
    LaurentPoly term =
        y_to_q(shift_all(table.T_upper(a), sh(-a))) *
        resolve_symbol(spec, Family::Q, 1, sh(spec.g - 2 * a, kHalf));
    if (a % 2)
      sum -= term;
    else
      sum += term;
  }
  auto &item = r.add("dualized T-Q sum = 0", sum.is_zero());
  if (!item.ok)
    item.detail = "residual: " + to_string(sum);
  r.wall_ms = sw.ms();
  return r;
}

CheckReport check_duality(const TTable &table) {
  Stopwatch sw;
  const AlgebraSpec &spec = table.spec;
  if (!spec.is_A2())
    throw std::invalid_argument("duality applies to the A2 families only");
  CheckReport r;
  r.name = "duality";
  r.param("algebra", kind_name(spec.kind));
  r.param("n", std::to_string(spec.n));
  for (int a = 0; a <= spec.N + 1; ++a) {
    LaurentPoly residual =
        table.T_upper(a) -
        shift_all(table.T_upper(spec.N + 1 - a), Shift(Rat(0), kHalf));
    auto &item = r.add("a=" + std::to_string(a), residual.is_zero());
    if (!item.ok)
      item.detail = "residual: " + to_string(residual);
  }
  r.wall_ms = sw.ms();
  return r;
}

CheckReport check_rewrite(const AlgebraSpec &spec) {
  Stopwatch sw;
  CheckReport r;
  r.name = "rewrite";
  r.param("algebra", kind_name(spec.kind));
  r.param("n", std::to_string(spec.n));
  const int top = spec.N + 1;
  DiffOperator L = build_L(spec, 0);
  DiffOperator rewritten = build_L_rewritten(spec);
  r.add("L equals the rewritten product", dop_equal(L, rewritten, top));
  DiffOperator filtration = build_L_filtration(spec, top);
  DiffOperator signed_L = dop_scale(L, top % 2 ? Int(-1) : Int(1));
  r.add("L_{N+1} = (-1)^{N+1} L", dop_equal(filtration, signed_L, top));
  r.wall_ms = sw.ms();
  return r;
}

CheckReport check_d34_lemmas(int K) {
  Stopwatch sw;
  if (K < 4)
    throw std::invalid_argument("d34 lemma check needs cutoff >= 4");
  AlgebraSpec spec = make_algebra(AlgebraKind::D34, 2);
  CheckReport r;
  r.name = "d34-lemmas";
  r.param("cutoff", std::to_string(K));

  DiffOperator L = build_L(spec, K);
  DiffOperator rewritten = d34_rewritten_L(spec, K);
  bool all = true;
  int first_bad = -1;
  for (int d = 0; d <= K; ++d) {
    if (L.coeff(d) != rewritten.coeff(d)) {
      all = false;
      first_bad = d;
      break;
    }
  }
  auto &item = r.add("rewritten L, degrees <= " + std::to_string(K), all);
  if (!all)
    item.detail = "first differing degree " + std::to_string(first_bad) +
                  ": " + to_string(L.coeff(first_bad) - rewritten.coeff(first_bad));

  const Shift u0;
  auto Y1 = [&spec](long p) { return resolve_symbol(spec, Family::Y, 1, sh(p)); };
  auto Y13 = [&spec](long p) { return power_product(spec, Family::Y, 1, 3, sh(p)); };

  DiffOperator lhs1 = dop_mul(one_minus_zD(z_var(spec, VarLabel::bar(2), u0)),
                              one_minus_zD(z_var(spec, VarLabel::bar(3), u0)));
  DiffOperator rhs1;
  rhs1.coeffs.emplace(0, LaurentPoly::constant(1));
  rhs1.coeffs.emplace(1, -(Y1(5) * d34_K(spec, 2, sh(6))));
  rhs1.coeffs.emplace(2, Y1(5) * Y1(7) * Y13(7).inverse_monomial());
  r.add("Y2 part, bar side", dop_equal(lhs1, rhs1, 2));

  DiffOperator lhs2 = dop_mul(one_minus_zD(z_var(spec, VarLabel::plain(3), u0)),
                              one_minus_zD(z_var(spec, VarLabel::plain(2), u0)));
  DiffOperator rhs2;
  rhs2.coeffs.emplace(0, LaurentPoly::constant(1));
  rhs2.coeffs.emplace(1, -(d34_H(spec, 2, sh(2)) * Y1(3).inverse_monomial()));
  rhs2.coeffs.emplace(2, Y13(3) * (Y1(3) * Y1(5)).inverse_monomial());
  r.add("Y2 part, plain side", dop_equal(lhs2, rhs2, 2));

  r.wall_ms = sw.ms();
  return r;
}

} // namespace tsyslab
