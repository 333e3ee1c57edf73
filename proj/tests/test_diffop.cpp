#include "tsyslab/diffop.hpp"

#include "tsyslab/poly_text.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <functional>

using namespace tsyslab;
using testutil::random_poly;

namespace {
const AlgebraSpec kA2E1 = make_algebra(AlgebraKind::A2Even, 1);
const AlgebraSpec kA2E2 = make_algebra(AlgebraKind::A2Even, 2);
const AlgebraSpec kA2O2 = make_algebra(AlgebraKind::A2Odd, 2);
const AlgebraSpec kA2O3 = make_algebra(AlgebraKind::A2Odd, 3);
const AlgebraSpec kD34 = make_algebra(AlgebraKind::D34, 2);

Shift sh(long p, Rat q = Rat(0)) { return Shift(Rat(p), std::move(q)); }

DiffOperator random_op(std::mt19937 &rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  DiffOperator op;
  int d = deg(rng);
  for (int i = 0; i <= d; ++i) {
    LaurentPoly c = random_poly(rng, Family::Y, 2, false);
    if (!c.is_zero())
      op.coeffs.emplace(i, c);
  }
  return op;
}

// Independent expansion oracle: over the x-variable form of the A2
// operators, T^a(u+a) = sum over b_1 > ... > b_a of
// x_{b_1}(u) x_{b_2}(u+2) ... x_{b_a}(u+2(a-1)).
LaurentPoly subset_T(const AlgebraSpec &spec, int a) {
  const int top = spec.N + 1;
  LaurentPoly total;
  std::vector<int> pick;
  std::function<void(int)> go = [&](int next) {
    if (static_cast<int>(pick.size()) == a) {
      LaurentPoly prod = LaurentPoly::constant(1);
      for (std::size_t c = 0; c < pick.size(); ++c)
        prod *= x_var(spec, pick[c], sh(2 * static_cast<long>(c)));
      total += prod;
      return;
    }
    for (int b = next; b >= 1; --b) {
      pick.push_back(b);
      go(b - 1);
      pick.pop_back();
    }
  };
  go(top);
  return shift_all(total, sh(-a));
}
} // namespace

TEST_SUITE("diffop") {

TEST_CASE("multiplication obeys D f(u) = f(u+2) D") {
  LaurentPoly y = resolve_symbol(kA2E1, Family::Y, 1, Shift());
  DiffOperator D;
  D.coeffs.emplace(1, LaurentPoly::constant(1));
  DiffOperator f;
  f.coeffs.emplace(0, y);
  DiffOperator prod = dop_mul(D, f);
  CHECK(prod.coeff(1) == resolve_symbol(kA2E1, Family::Y, 1, sh(2)));

  DiffOperator one_minus = one_minus_zD(y);
  CHECK(dop_mul(one_minus, DiffOperator::identity()).coeffs == one_minus.coeffs);

  LaurentPoly b = resolve_symbol(kA2E1, Family::Y, 1, sh(1));
  DiffOperator lhs = dop_mul(one_minus_zD(y), one_minus_zD(b));
  CHECK(lhs.coeff(0).is_one());
  CHECK(lhs.coeff(1) == -(y + b));
  CHECK(lhs.coeff(2) == y * shift_all(b, sh(2)));
}

TEST_CASE("dop_mul is associative") {
  std::mt19937 rng(29);
  for (int i = 0; i < 60; ++i) {
    DiffOperator a = random_op(rng, 2), b = random_op(rng, 2), c = random_op(rng, 2);
    CHECK(dop_mul(dop_mul(a, b), c).coeffs == dop_mul(a, dop_mul(b, c)).coeffs);
  }
}

TEST_CASE("geometric_inverse expands (1 - c D^2)^-1") {
  LaurentPoly z = resolve_symbol(kD34, Family::Y, 1, Shift());
  CHECK(geometric_inverse(LaurentPoly(), 6).coeffs == DiffOperator::identity().coeffs);

  DiffOperator k2 = geometric_inverse(z, 2);
  CHECK(k2.coeff(0).is_one());
  CHECK(k2.coeff(2) == z);
  CHECK_THROWS_AS(k2.coeff(3), std::out_of_range);

  DiffOperator k4 = geometric_inverse(z, 4);
  CHECK(k4.coeff(4) == z * shift_all(z, sh(4)));
  CHECK(k4.coeff(1).is_zero());

  // Cancels its defining factor up to the cutoff.
  DiffOperator factor;
  factor.coeffs.emplace(0, LaurentPoly::constant(1));
  factor.coeffs.emplace(2, -z);
  DiffOperator prod = dop_mul(factor, geometric_inverse(z, 8));
  CHECK(prod.coeff(0).is_one());
  for (int d = 1; d <= 8; ++d)
    CHECK(prod.coeff(d).is_zero());
}

TEST_CASE("build_L is exact of degree N+1 for the A2 families") {
  for (const AlgebraSpec *s : {&kA2E1, &kA2E2, &kA2O2, &kA2O3}) {
    DiffOperator L = build_L(*s, 0);
    CHECK(L.exact());
    CHECK(L.max_degree() == s->N + 1);
    // Full telescoping at the top: coefficient (-1)^{N+1}.
    LaurentPoly top = L.coeff(s->N + 1);
    CHECK(top == LaurentPoly(Int((s->N + 1) % 2 ? -1 : 1)));
  }
  DiffOperator trivial = build_L(kD34, 0);
  CHECK(trivial.max_degree() == 0);
  CHECK(trivial.coeff(0).is_one());
}

TEST_CASE("extract_T against the subset-expansion oracle") {
  for (const AlgebraSpec *s : {&kA2E1, &kA2E2, &kA2O2, &kA2O3}) {
    TTable t = extract_T(*s, build_L(*s, 0));
    CHECK(t.T_upper(0).is_one());
    CHECK(t.T_upper(s->N + 1).is_one());
    CHECK(t.T_upper(s->N + 2).is_zero());
    CHECK(t.T_upper(-1).is_zero());
    for (int a = 1; a <= s->N; ++a)
      CHECK(t.T_upper(a) == subset_T(*s, a));
  }
}

TEST_CASE("frozen T^1 for A2Even n=1") {
  TTable t = extract_T(kA2E1, build_L(kA2E1, 0));
  CHECK(to_string(t.T_upper(1)) ==
        "Y[1](u) + Y[1](u+1+1/2t)*Y[1](u+2)^-1 + Y[1](u+3+1/2t)^-1");
  CHECK(t.T_upper(1).term_count() == 3);
}

TEST_CASE("T^1 term counts with unit coefficients") {
  for (const AlgebraSpec *s : {&kA2E1, &kA2E2, &kA2O2, &kA2O3}) {
    TTable t = extract_T(*s, build_L(*s, 0));
    std::size_t expect = s->kind == AlgebraKind::A2Even ? 2 * s->n + 1 : 2 * s->n;
    CHECK(t.T_upper(1).term_count() == expect);
    for (const auto &[m, c] : t.T_upper(1).terms()) {
      (void)m;
      CHECK(c == 1);
    }
  }
}

TEST_CASE("solve_lower implements the T-T recursion") {
  TTable t = extract_T(kA2E1, build_L(kA2E1, 0));
  solve_lower(t, 3);
  CHECK(t.T_lower(0).is_one());
  CHECK(t.T_lower(-2).is_zero());
  // m = 1: T_1 = T^1.
  CHECK(t.T_lower(1) == t.T_upper(1));
  // m = 2 instance: T_2(u+2) = T_1(u+3) T^1(u+1) - T^2(u+2).
  LaurentPoly lhs = shift_all(t.T_lower(2), sh(2));
  LaurentPoly rhs = shift_all(t.T_lower(1), sh(3)) * shift_all(t.T_upper(1), sh(1)) -
                    shift_all(t.T_upper(2), sh(2));
  CHECK(lhs == rhs);
}

TEST_CASE("TT-1 holds by construction, TT-2 as an independent identity") {
  for (const AlgebraSpec *s : {&kA2E1, &kA2O2}) {
    TTable t = extract_T(*s, build_L(*s, 0));
    solve_lower(t, 6);
    for (int m = 0; m <= 6; ++m) {
      LaurentPoly sum;
      for (int a = 0; a <= m; ++a) {
        LaurentPoly term = shift_all(t.T_lower(m - a), sh(m + a)) *
                           shift_all(t.T_upper(a), sh(a));
        sum += a % 2 ? -term : term;
      }
      CHECK(sum == (m == 0 ? LaurentPoly::constant(1) : LaurentPoly()));
    }
    CHECK(check_TT2(t, 6).passed());
  }
}

TEST_CASE("apply_operator and the T-Q relations") {
  DiffOperator L = build_L(kA2E1, 0);
  CHECK(apply_operator(DiffOperator::identity(),
                       resolve_symbol(kA2E1, Family::Q, 1, Shift())) ==
        resolve_symbol(kA2E1, Family::Q, 1, Shift()));
  CHECK(apply_operator(L, resolve_symbol(kA2E1, Family::Q, 1, Shift())).is_zero());
  CHECK(apply_operator(build_L(kA2O2, 0),
                       resolve_symbol(kA2O2, Family::Q, 1, Shift())).is_zero());
  CHECK_THROWS_AS(apply_operator(build_L(kD34, 4), LaurentPoly::constant(1)),
                  std::invalid_argument);
  CHECK(check_TQ1(kA2E1, L).passed());
  CHECK(check_TQ2(extract_T(kA2E1, L)).passed());
}

TEST_CASE("duality across the full A2 range") {
  for (const AlgebraSpec *s : {&kA2E1, &kA2E2, &kA2O2, &kA2O3})
    CHECK(check_duality(extract_T(*s, build_L(*s, 0))).passed());
}

TEST_CASE("rewrite lemma and filtration normalization") {
  for (const AlgebraSpec *s : {&kA2E1, &kA2E2, &kA2O2})
    CHECK(check_rewrite(*s).passed());
  CHECK_THROWS_AS(build_L_rewritten(kD34), std::invalid_argument);
}

TEST_CASE("theta-zero: the whole A2 identity set still closes") {
  ThetaZeroGuard guard(true);
  for (const AlgebraSpec *s : {&kA2E1, &kA2O2}) {
    DiffOperator L = build_L(*s, 0);
    TTable t = extract_T(*s, L);
    solve_lower(t, 4);
    CHECK(check_duality(t).passed());
    CHECK(check_TQ1(*s, L).passed());
    CHECK(check_TQ2(t).passed());
    CHECK(check_TT2(t, 4).passed());
  }
}

TEST_CASE("D3_4 structural lemmas") {
  CHECK(check_d34_lemmas(8).passed());
  CHECK_THROWS_AS(check_d34_lemmas(2), std::invalid_argument);

  // A_0(u) = K_1(u+5+t/3) H_1(u+3-t/3): the delta_{j0} term drops.
  DiffOperator rewritten = d34_rewritten_L(kD34, 8);
  DiffOperator L = build_L(kD34, 8);
  CHECK(L.coeff(1) == rewritten.coeff(1));
  LaurentPoly A0 = d34_K(kD34, 1, sh(5, Rat(1, 3))) * d34_H(kD34, 1, sh(3, Rat(-1, 3)));
  LaurentPoly z_sum;
  for (int a = 1; a <= 4; ++a)
    z_sum += z_var(kD34, VarLabel::plain(a), Shift()) +
             z_var(kD34, VarLabel::bar(a), Shift());
  // degree-1 coefficient of L is -(sum of all z) and splits as
  // K_1(u+7) + A_0(u) + H_1(u+1).
  CHECK(-z_sum == L.coeff(1));
  CHECK(z_sum == d34_K(kD34, 1, sh(7)) + A0 + d34_H(kD34, 1, sh(1)));
}

TEST_CASE("series cutoff bookkeeping") {
  DiffOperator L = build_L(kD34, 5);
  CHECK(!L.exact());
  CHECK(*L.cutoff == 5);
  CHECK_THROWS_AS(L.coeff(6), std::out_of_range);
  TTable t = extract_T(kD34, L);
  CHECK_THROWS_AS(t.T_upper(6), std::out_of_range);
  CHECK(t.T_upper(5) == t.T_upper(5));
}

} // TEST_SUITE
