#include "tsyslab/variables.hpp"

#include "tsyslab/poly_text.hpp"

#include <doctest.h>

using namespace tsyslab;

namespace {
const AlgebraSpec kA2E1 = make_algebra(AlgebraKind::A2Even, 1);
const AlgebraSpec kA2E2 = make_algebra(AlgebraKind::A2Even, 2);
const AlgebraSpec kA2O2 = make_algebra(AlgebraKind::A2Odd, 2);
const AlgebraSpec kA2O3 = make_algebra(AlgebraKind::A2Odd, 3);
const AlgebraSpec kD22 = make_algebra(AlgebraKind::D2, 2);
const AlgebraSpec kD23 = make_algebra(AlgebraKind::D2, 3);
const AlgebraSpec kD34 = make_algebra(AlgebraKind::D34, 2);

int top_bound(const AlgebraSpec &s) {
  switch (s.kind) {
  case AlgebraKind::A2Even:
  case AlgebraKind::A2Odd:
    return s.n;
  case AlgebraKind::D2:
    return s.n - 1;
  case AlgebraKind::D34:
    return 2;
  }
  return 0;
}
} // namespace

TEST_SUITE("variables") {

TEST_CASE("displayed equations, spot checks") {
  CHECK(to_string(z_var(kA2E1, VarLabel::zero(), Shift())) ==
        "Y[1](u+2+1/2t)*Y[1](u+3)^-1");
  CHECK(to_string(z_var(kA2E1, VarLabel::plain(1), Shift())) == "Y[1](u+1)");
  CHECK(to_string(z_var(kD34, VarLabel::bar(1), Shift())) == "Y[1](u+7)^-1");
  // z_2 of D3_4 carries the full Y^3 power product.
  CHECK(to_string(z_var(kD34, VarLabel::plain(2), Shift())) ==
        "Y[1](u+3)^-1*Y[2](u+2)*Y[2](u+2+1/3t)*Y[2](u+2+2/3t)");
  // D2 middle variables.
  CHECK(to_string(z_var(kD22, VarLabel::plain(3), Shift())) ==
        "Y[2](u+2+1/2t)*Y[2](u+4)^-1");
  CHECK(to_string(z_var(kD22, VarLabel::bar(3), Shift())) ==
        "Y[2](u+2)*Y[2](u+4+1/2t)^-1");
}

TEST_CASE("labels outside the algebra are rejected") {
  CHECK_THROWS_AS(z_var(kA2O2, VarLabel::zero(), Shift()), std::invalid_argument);
  CHECK_THROWS_AS(z_var(kA2E1, VarLabel::plain(2), Shift()), std::out_of_range);
  CHECK_THROWS_AS(x_var(kD34, 1, Shift()), std::invalid_argument);
  CHECK_THROWS_AS(x_var(kA2E1, 4, Shift()), std::out_of_range);
}

TEST_CASE("x ordering covers z, z0 and zbar") {
  CHECK(x_var(kA2E1, 2, Shift()) == z_var(kA2E1, VarLabel::zero(), Shift()));
  CHECK(x_var(kA2E1, 3, Shift()) == z_var(kA2E1, VarLabel::bar(1), Shift()));
  CHECK(x_var(kA2O2, 3, Shift()) == z_var(kA2O2, VarLabel::bar(2), Shift()));
  CHECK(x_var(kA2O2, 4, Shift()) == z_var(kA2O2, VarLabel::bar(1), Shift()));
  CHECK(x_count(kA2E2) == 5);
  CHECK(x_count(kA2O3) == 6);
}

TEST_CASE("top-term telescoping: prod z_k(u+a-2k) = Y_a^{r_a}(u)") {
  for (const AlgebraSpec *s : {&kA2E1, &kA2E2, &kA2O2, &kA2O3, &kD22, &kD23, &kD34}) {
    for (int a = 1; a <= top_bound(*s); ++a) {
      LaurentPoly prod = LaurentPoly::constant(1);
      for (int k = 1; k <= a; ++k)
        prod *= z_var(*s, VarLabel::plain(k), Shift(Rat(a - 2 * k), Rat(0)));
      CHECK(prod == power_product(*s, Family::Y, a, s->r_orbit(a), Shift()));
    }
  }
}

TEST_CASE("every z variable is a single Y-monomial of the displayed degree") {
  // |exponent| totals transcribed from the displayed equations.
  auto degree = [](const LaurentPoly &p) {
    REQUIRE(p.is_monomial());
    long total = 0;
    for (const auto &[sym, e] : p.terms().begin()->first.syms) {
      (void)sym;
      total += e < 0 ? -e : e;
    }
    return total;
  };
  // A2Even n=2: z_a and zbar_a are ratios of single Ys (Y_0 = 1 drops out).
  CHECK(degree(z_var(kA2E2, VarLabel::plain(1), Shift())) == 1);
  CHECK(degree(z_var(kA2E2, VarLabel::plain(2), Shift())) == 2);
  CHECK(degree(z_var(kA2E2, VarLabel::zero(), Shift())) == 2);
  CHECK(degree(z_var(kA2E2, VarLabel::bar(1), Shift())) == 1);
  CHECK(degree(z_var(kA2E2, VarLabel::bar(2), Shift())) == 2);
  // A2Odd n=2: the n-th pair carries Y^2 products.
  CHECK(degree(z_var(kA2O2, VarLabel::plain(2), Shift())) == 3);
  CHECK(degree(z_var(kA2O2, VarLabel::bar(2), Shift())) == 3);
  // D2 n=2: doubled plain/bar variables, single middle ones.
  CHECK(degree(z_var(kD22, VarLabel::plain(1), Shift())) == 2);
  CHECK(degree(z_var(kD22, VarLabel::plain(2), Shift())) == 4);
  CHECK(degree(z_var(kD22, VarLabel::plain(3), Shift())) == 2);
  CHECK(degree(z_var(kD22, VarLabel::bar(3), Shift())) == 2);
  // D3_4 from (z-d34) literally.
  CHECK(degree(z_var(kD34, VarLabel::plain(1), Shift())) == 1);
  CHECK(degree(z_var(kD34, VarLabel::plain(2), Shift())) == 4);
  CHECK(degree(z_var(kD34, VarLabel::plain(3), Shift())) == 5);
  CHECK(degree(z_var(kD34, VarLabel::plain(4), Shift())) == 2);
  CHECK(degree(z_var(kD34, VarLabel::bar(4), Shift())) == 2);
  CHECK(degree(z_var(kD34, VarLabel::bar(3), Shift())) == 5);
  CHECK(degree(z_var(kD34, VarLabel::bar(2), Shift())) == 4);
  CHECK(degree(z_var(kD34, VarLabel::bar(1), Shift())) == 1);
}

} // TEST_SUITE
