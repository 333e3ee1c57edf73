#ifndef TSYSLAB_CASORATI_HPP
#define TSYSLAB_CASORATI_HPP

#include "tsyslab/diffop.hpp"
#include "tsyslab/report.hpp"
#include "tsyslab/tsystem.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace tsyslab {

enum class Precision { Double, High };

struct CasoratiParams {
  AlgebraKind kind = AlgebraKind::A2Even;
  int n = 1;
  std::uint64_t seed = 1;
  int trials = 20;
  int m_max = 3;
  int a_max = 0; // 0 means n
  Precision precision = Precision::Double;
  double tolerance = 1e-8;
};

// Numeric verification entry points (A2 families only). Each runs the
// stated number of independently seeded trials and reports the worst
// relative residual per item.
CheckReport check_casorati_structure(const CasoratiParams &p);
CheckReport check_triple_agreement(const CasoratiParams &p);
CheckReport check_tsystem_numeric(const CasoratiParams &p);

// Thrown internally when an evaluation lands too close to a pole or a
// frame degenerates; trials catch it and redraw.
struct ResampleNeeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------
// Templated numeric core, shared by the double and high-precision paths.

template <class T> struct CNum {
  T re{}, im{};
  CNum() = default;
  CNum(T r, T i) : re(std::move(r)), im(std::move(i)) {}
  explicit CNum(double r) : re(r), im(0) {}

  CNum operator+(const CNum &o) const { return {T(re + o.re), T(im + o.im)}; }
  CNum operator-(const CNum &o) const { return {T(re - o.re), T(im - o.im)}; }
  CNum operator-() const { return {T(-re), T(-im)}; }
  CNum operator*(const CNum &o) const {
    return {T(re * o.re - im * o.im), T(re * o.im + im * o.re)};
  }
  CNum operator/(const CNum &o) const {
    T d = o.re * o.re + o.im * o.im;
    return {T((re * o.re + im * o.im) / d), T((im * o.re - re * o.im) / d)};
  }
  CNum &operator+=(const CNum &o) { return *this = *this + o; }
  CNum &operator*=(const CNum &o) { return *this = *this * o; }
};

template <class T> T abs_value(const CNum<T> &z) {
  using std::sqrt;
  return sqrt(z.re * z.re + z.im * z.im);
}

template <class T> CNum<T> complex_sinh(const CNum<T> &z) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  return {T(sinh(z.re) * cos(z.im)), T(cosh(z.re) * sin(z.im))};
}

template <class T> CNum<T> complex_pow(CNum<T> base, long e) {
  if (e < 0) {
    base = CNum<T>(1.0) / base;
    e = -e;
  }
  CNum<T> acc(1.0);
  while (e > 0) {
    if (e & 1)
      acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

template <class T> T pi_value() {
  using std::acos;
  return acos(T(-1));
}

inline double to_double(double x) { return x; }
template <class T> double to_double(const T &x) {
  return x.template convert_to<double>();
}

// A sinh-product specialization of the Q functions:
// Q_a(u) = prod_k sinh(hbar (u - u_k)), so Q_a(u + pi i/hbar) =
// (-1)^{M_a} Q_a(u) exactly and h_a = (-1)^{M_a}.
template <class T> class NumericModel {
public:
  NumericModel(const AlgebraSpec &spec, std::uint64_t seed)
      : spec_(spec), seed_(seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> re(-2.0, 2.0), im(-1.0, 1.0),
        jitter(-0.1, 0.1), mcount(0.0, 1.0);
    // hbar fixes the imaginary period pi/hbar of the root lattice. The
    // evaluation lines Im(u0) and Im(u0) + pi/(2 hbar) must both stay
    // clear of the root band Im in [-1,1] mod the period, which needs
    // pi/(4 hbar) - 1 comfortably positive; 0.45 leaves 0.75 clearance
    // with Im(u0) at quarter period. Poles near the lattice otherwise
    // wreck the conditioning of the Casorati determinants.
    hbar_ = T(0.45);
    T quarter = T(pi_value<T>() / (hbar_ * T(4)));
    u0_ = CNum<T>(T(0.37 + jitter(rng)), T(quarter + T(jitter(rng))));
    roots_.resize(spec.n);
    for (int a = 0; a < spec.n; ++a) {
      int M = mcount(rng) < 0.5 ? 2 : 3;
      for (int k = 0; k < M; ++k)
        roots_[a].push_back(CNum<T>(T(re(rng)), T(im(rng))));
    }
  }

  const AlgebraSpec &spec() const { return spec_; }
  std::uint64_t seed() const { return seed_; }
  const CNum<T> &u0() const { return u0_; }
  const T &hbar() const { return hbar_; }
  T t_imag() const { return T(pi_value<T>() / hbar_); } // Im of pi i/hbar
  int root_count(int a) const { return static_cast<int>(roots_[a - 1].size()); }
  int unit_sign(int a) const { return root_count(a) % 2 ? -1 : 1; }

  // Value of u0 + s as a complex number.
  CNum<T> point(const Shift &s) const {
    T pr = rat_to(s.p);
    T qi = T(rat_to(s.q) * t_imag());
    return CNum<T>(T(u0_.re + pr), T(u0_.im + qi));
  }

  CNum<T> eval_Q(int a, const CNum<T> &v) const {
    CNum<T> acc(1.0);
    for (const auto &root : roots_[a - 1])
      acc *= complex_sinh(CNum<T>(T(hbar_ * (v.re - root.re)),
                                  T(hbar_ * (v.im - root.im))));
    return acc;
  }

  // Distance from v to the zero set of Q_a (the root lattice mod t).
  T pole_distance(int a, const CNum<T> &v) const {
    using std::abs;
    using std::floor;
    T best(1e30);
    T period = t_imag();
    for (const auto &root : roots_[a - 1]) {
      T dim = v.im - root.im;
      T cycles = floor(dim / period + T(0.5));
      for (int d = -1; d <= 1; ++d) {
        T rim = dim - (cycles + T(d)) * period;
        T dre = v.re - root.re;
        T dist = abs_value(CNum<T>(dre, rim));
        if (dist < best)
          best = dist;
      }
    }
    return best;
  }

  CNum<T> eval_Y(int a, const CNum<T> &v) const {
    CNum<T> hi(T(v.re + 1), v.im);
    CNum<T> lo(T(v.re - 1), v.im);
    if (pole_distance(a, hi) < T(1e-8))
      throw ResampleNeeded("Y evaluation too close to a pole");
    return eval_Q(a, lo) / eval_Q(a, hi);
  }

  CNum<T> eval_symbol(const FormalSymbol &sym, const CNum<T> &base) const {
    T pr = rat_to(sym.shift.p);
    T qi = T(rat_to(sym.shift.q) * t_imag());
    CNum<T> v(T(base.re + pr), T(base.im + qi));
    return sym.family == Family::Q ? eval_Q(sym.index, v)
                                   : eval_Y(sym.index, v);
  }

  // Substitutes u -> base into the polynomial.
  CNum<T> eval(const LaurentPoly &p, const CNum<T> &base) const {
    CNum<T> acc(0.0);
    for (const auto &[m, c] : p.terms()) {
      CNum<T> term(c.template convert_to<double>());
      for (const auto &[sym, e] : m.syms)
        term *= complex_pow(eval_symbol(sym, base), e);
      for (const auto &[idx, e] : m.units)
        if (unit_sign(idx) < 0 && (e % 2))
          term = -term;
      acc += term;
    }
    return acc;
  }

private:
  static T rat_to(const Rat &x) {
    return T(numerator(x).template convert_to<double>()) /
           T(denominator(x).template convert_to<double>());
  }

  AlgebraSpec spec_;
  std::uint64_t seed_;
  T hbar_;
  CNum<T> u0_;
  std::vector<std::vector<CNum<T>>> roots_;
};

// Complex value with a separated log-magnitude, for determinants whose
// raw size would overflow.
template <class T> struct ScaledC {
  CNum<T> mant;
  T logmag{};
};

// Guard type for the frame recursions and determinants. The Casorati
// determinants are constant along the lattice while the basis entries
// grow exponentially, so evaluating them costs tens of digits of
// cancellation; the frames therefore run in 50-digit arithmetic on top
// of the model's own precision. The model data (Q roots, x values)
// stays at the model precision.
template <class T> struct FrameScalar {
  using type = boost::multiprecision::cpp_bin_float_50;
};
template <> struct FrameScalar<boost::multiprecision::cpp_bin_float_50> {
  using type = boost::multiprecision::cpp_bin_float_100;
};

template <class W, class T> CNum<W> widen(const CNum<T> &z) {
  return CNum<W>(W(z.re), W(z.im));
}

// Filtered solution bases of L(u) w = 0 on the four step-2 sublattices
// u0 + {0,1} + {0, t/2} + 2Z. Basis b satisfies L_b w_b = 0, built by the
// first-order cascade of the factorization of L_b.
template <class T> class FrameSet {
public:
  using W = typename FrameScalar<T>::type;

  FrameSet(const NumericModel<T> &model, std::uint64_t constants_seed,
           int k_min, int k_max)
      : model_(&model), k_min_(k_min), k_max_(k_max) {
    const AlgebraSpec &spec = model.spec();
    const int top = spec.N + 1;
    xpoly_.resize(top + 1);
    for (int c = 1; c <= top; ++c)
      xpoly_[c] = x_var(spec, c, Shift(Rat(top - 2 * c), Rat(1, 2)));
    std::mt19937_64 rng(constants_seed ^ 0xd1b54a32d192ed03ULL);
    for (int eps = 0; eps < 2; ++eps)
      for (int p0 = 0; p0 < 2; ++p0)
        build_sublattice(eps, p0, rng);
  }

  const NumericModel<T> &model() const { return *model_; }
  int k_min() const { return k_min_; }
  int k_max() const { return k_max_; }

  // x_c(v + N+1-2c + t/2) at lattice point k of a sublattice.
  const CNum<W> &x_cached(int eps, int p0, int c, int k) const {
    return fcache_[eps][p0][c][k - k_min_];
  }

  const CNum<W> &basis(int eps, int p0, int b, int k) const {
    return w_[eps][p0][b - 1][k - k_min_];
  }

  // w_b at the point u0 + s (s.p integral, s.q in {0, 1/2} mod 1).
  const CNum<W> &value_at(int b, const Shift &s) const {
    auto [eps, p0, k] = locate(s);
    return basis(eps, p0, b, k);
  }

  ScaledC<W> xi(const std::vector<int> &idx, const Shift &base) const;
  // xi^{(a)}_m = [0..a-1, a+m..N+m].
  ScaledC<W> xi_am(int a, int m, const Shift &base) const;
  static std::vector<int> xi_indices(int N, int a, int m);

  // Casorati solution T^{(a)}_m(u0 + s) = xi^{(a)}_m / xi at s-a-m+1.
  CNum<W> casorati_T(int a, int m, const Shift &s) const;

  // Max relative residual of L_b w_b over the window interior.
  W kernel_residual(int eps, int p0, int b) const;

private:
  std::tuple<int, int, int> locate(const Shift &s) const {
    Rat q = s.q;
    Int whole = rat_floor(q);
    q -= Rat(whole);
    int eps;
    if (q == 0)
      eps = 0;
    else if (q == Rat(1, 2))
      eps = 1;
    else
      throw std::invalid_argument("frame lattice carries t/2 offsets only");
    if (denominator(s.p) != 1)
      throw std::invalid_argument("frame lattice is integral in u");
    long p = numerator(s.p).template convert_to<long>();
    int p0 = ((p % 2) + 2) % 2;
    long k = (p - p0) / 2;
    if (k < k_min_ || k > k_max_)
      throw std::out_of_range("casorati window overflow");
    return {eps, p0, static_cast<int>(k)};
  }

  void build_sublattice(int eps, int p0, std::mt19937_64 &rng);
  CNum<T> draw_constant(std::mt19937_64 &rng) const {
    std::uniform_real_distribution<double> mod(0.5, 1.5), arg(0.0, 2 * 3.14159265358979324);
    double m = mod(rng), a = arg(rng);
    return CNum<T>(T(m * std::cos(a)), T(m * std::sin(a)));
  }

  const NumericModel<T> *model_;
  int k_min_, k_max_;
  std::vector<LaurentPoly> xpoly_;
  // [eps][p0][c][k]  and  [eps][p0][b-1][k]
  std::array<std::array<std::vector<std::vector<CNum<W>>>, 2>, 2> fcache_;
  std::array<std::array<std::vector<std::vector<CNum<W>>>, 2>, 2> w_;
};

template <class T>
void FrameSet<T>::build_sublattice(int eps, int p0, std::mt19937_64 &rng) {
  const AlgebraSpec &spec = model_->spec();
  const int top = spec.N + 1;
  const int len = k_max_ - k_min_ + 1;

  auto &fc = fcache_[eps][p0];
  fc.assign(top + 1, {});
  for (int c = 1; c <= top; ++c) {
    fc[c].resize(len);
    for (int k = 0; k < len; ++k) {
      Shift s(Rat(p0 + 2 * (k_min_ + k)), Rat(eps, 2));
      fc[c][k] = widen<W>(model_->eval(xpoly_[c], model_->point(s)));
    }
  }

  auto &wb = w_[eps][p0];
  wb.assign(top, std::vector<CNum<W>>(len));
  for (int b = 1; b <= top; ++b) {
    // Innermost factor of L_b is c = N+1; the leftmost is c = N+2-b.
    std::vector<CNum<W>> cur(len);
    cur[0] = widen<W>(draw_constant(rng));
    for (int k = 0; k + 1 < len; ++k)
      cur[k + 1] = fc[top + 1 - b][k] * cur[k];
    for (int c = top + 2 - b; c <= top; ++c) {
      std::vector<CNum<W>> next(len);
      next[0] = widen<W>(draw_constant(rng));
      for (int k = 0; k + 1 < len; ++k)
        next[k + 1] = fc[c][k] * next[k] + cur[k];
      cur = std::move(next);
    }
    wb[b - 1] = std::move(cur);
  }
}

template <class T>
std::vector<int> FrameSet<T>::xi_indices(int N, int a, int m) {
  std::vector<int> idx;
  for (int i = 0; i < a; ++i)
    idx.push_back(i);
  for (int i = a + m; i <= N + m; ++i)
    idx.push_back(i);
  return idx;
}

template <class T>
auto FrameSet<T>::xi(const std::vector<int> &idx, const Shift &base) const
    -> ScaledC<W> {
  using std::abs;
  using std::log;
  const int top = model_->spec().N + 1;
  if (static_cast<int>(idx.size()) != top)
    throw std::invalid_argument("xi needs N+1 indices");
  std::vector<std::vector<CNum<W>>> m(top, std::vector<CNum<W>>(top));
  W logscale(0);
  for (int b = 1; b <= top; ++b) {
    W rowmax(0);
    for (int c = 0; c < top; ++c) {
      m[b - 1][c] = value_at(b, base + Shift(Rat(2 * idx[c]), Rat(0)));
      rowmax = std::max(rowmax, abs_value(m[b - 1][c]));
    }
    if (rowmax == W(0))
      throw ResampleNeeded("zero basis row");
    logscale += log(rowmax);
    for (int c = 0; c < top; ++c)
      m[b - 1][c] = m[b - 1][c] / CNum<W>(rowmax, W(0));
  }
  // LU with partial pivoting on the row-normalized matrix.
  CNum<W> det(1.0);
  for (int col = 0; col < top; ++col) {
    int pivot = col;
    W best = abs_value(m[col][col]);
    for (int r2 = col + 1; r2 < top; ++r2) {
      W cand = abs_value(m[r2][col]);
      if (cand > best) {
        best = cand;
        pivot = r2;
      }
    }
    if (best == W(0))
      return ScaledC<W>{CNum<W>(0.0), logscale};
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r2 = col + 1; r2 < top; ++r2) {
      CNum<W> f = m[r2][col] / m[col][col];
      for (int c2 = col; c2 < top; ++c2)
        m[r2][c2] = m[r2][c2] - f * m[col][c2];
    }
  }
  return ScaledC<W>{det, logscale};
}

template <class T>
auto FrameSet<T>::xi_am(int a, int m, const Shift &base) const -> ScaledC<W> {
  return xi(xi_indices(model_->spec().N, a, m), base);
}

template <class T>
auto FrameSet<T>::casorati_T(int a, int m, const Shift &s) const -> CNum<W> {
  using std::exp;
  Shift base = s + Shift(Rat(1 - a - m), Rat(0));
  ScaledC<W> num = xi_am(a, m, base);
  ScaledC<W> den = xi_am(0, 0, base);
  // The row-normalized determinant shrinks with the intrinsic Casoratian
  // cancellation; the guard digits of W absorb that. Reject only when the
  // cancellation would eat into the guard budget.
  W dm = abs_value(den.mant);
  int spare = std::numeric_limits<W>::digits10 - 20;
  if (dm < W(std::pow(10.0, -spare)))
    throw ResampleNeeded("degenerate frame determinant");
  CNum<W> ratio = num.mant / den.mant;
  W scale = exp(W(num.logmag - den.logmag));
  return CNum<W>(W(ratio.re * scale), W(ratio.im * scale));
}

template <class T>
auto FrameSet<T>::kernel_residual(int eps, int p0, int b) const -> W {
  const int top = model_->spec().N + 1;
  const int len = k_max_ - k_min_ + 1;
  std::vector<CNum<W>> cur(w_[eps][p0][b - 1]);
  W scale(0);
  for (const auto &v : cur)
    scale = std::max(scale, abs_value(v));
  // Apply the factors of L_b from the innermost (c = N+1) outwards;
  // each application shortens the window by one step.
  int live = len;
  for (int c = top; c >= top + 1 - b; --c) {
    std::vector<CNum<W>> next(live - 1);
    W level(0);
    for (int k = 0; k + 1 < live; ++k) {
      next[k] = cur[k + 1] - fcache_[eps][p0][c][k] * cur[k];
      level = std::max(level, std::max(abs_value(cur[k + 1]),
                                       abs_value(fcache_[eps][p0][c][k] * cur[k])));
    }
    scale = std::max(scale, level);
    cur = std::move(next);
    --live;
  }
  W worst(0);
  for (const auto &v : cur)
    worst = std::max(worst, abs_value(v));
  return scale > W(0) ? W(worst / scale) : worst;
}

} // namespace tsyslab

#endif
