#include "tsyslab/casorati.hpp"

#include "tsyslab/poly_text.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <chrono>
#include <map>
#include <sstream>

namespace tsyslab {

namespace {

using BigFloat = boost::multiprecision::cpp_bin_float_50;

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

template <class T> double rel_err(const CNum<T> &a, const CNum<T> &b) {
  double scale = std::max({to_double(abs_value(a)), to_double(abs_value(b)), 1e-300});
  return to_double(abs_value(a - b)) / scale;
}

// Relative difference of two scaled determinants.
template <class T>
double scaled_rel_err(const ScaledC<T> &a, const ScaledC<T> &b) {
  using std::exp;
  T lead = std::max(a.logmag, b.logmag);
  CNum<T> av = a.mant * CNum<T>(exp(T(a.logmag - lead)), T(0));
  CNum<T> bv = b.mant * CNum<T>(exp(T(b.logmag - lead)), T(0));
  return rel_err(av, bv);
}

template <class T>
ScaledC<T> scaled_mul(const ScaledC<T> &a, const ScaledC<T> &b) {
  return ScaledC<T>{a.mant * b.mant, T(a.logmag + b.logmag)};
}

template <class T>
CNum<T> scaled_ratio(const ScaledC<T> &num, const ScaledC<T> &den) {
  using std::exp;
  CNum<T> r = num.mant / den.mant;
  T s = exp(T(num.logmag - den.logmag));
  return CNum<T>(T(r.re * s), T(r.im * s));
}

// Collects the worst residual seen per labelled item across trials.
struct Worst {
  std::map<std::string, double> items;
  std::vector<std::string> order;
  void note(const std::string &label, double err) {
    auto it = items.find(label);
    if (it == items.end()) {
      items.emplace(label, err);
      order.push_back(label);
    } else if (err > it->second) {
      it->second = err;
    }
  }
  void emit(CheckReport &r, double tol) const {
    for (const auto &label : order) {
      double err = items.at(label);
      auto &item = r.add(label, err <= tol);
      item.residual = err;
    }
  }
};

int window_min(const AlgebraSpec &spec, int m_max) {
  return -(spec.N + m_max + 5) / 2 - 2;
}
int window_max(const AlgebraSpec &spec, int m_max) {
  return (spec.N + m_max + 6) / 2 + spec.N + m_max + 4;
}

template <class T, class Body>
void run_trials(const CasoratiParams &p, const AlgebraSpec &spec, int m_max,
                const Body &body) {
  for (int trial = 0; trial < p.trials; ++trial) {
    bool done = false;
    for (int attempt = 0; attempt < 10 && !done; ++attempt) {
      std::uint64_t s = p.seed + 1000003ULL * trial + 77777ULL * attempt;
      try {
        NumericModel<T> model(spec, s);
        FrameSet<T> frames(model, s ^ 0xabcdefULL, window_min(spec, m_max),
                           window_max(spec, m_max));
        body(model, frames, s);
        done = true;
      } catch (const ResampleNeeded &e) {
        if (attempt == 9)
          throw std::runtime_error(
              "casorati: 10 resampling attempts exhausted (seed " +
              std::to_string(s) + "): " + e.what());
      }
    }
  }
}

std::vector<std::vector<int>> mnnsy_index_sets(int N) {
  std::vector<std::vector<int>> sets;
  std::vector<int> identity(N + 1);
  for (int i = 0; i <= N; ++i)
    identity[i] = i;
  sets.push_back(identity);
  for (int a = 1; a <= N; ++a) {
    std::vector<int> idx(N + 1);
    for (int b = 0; b <= N; ++b)
      idx[b] = b < a ? b : b + 1;
    sets.push_back(idx);
  }
  std::vector<int> staggered(N + 1);
  for (int i = 0; i <= N; ++i)
    staggered[i] = 2 * i;
  sets.push_back(staggered);
  return sets;
}

std::string index_str(const std::vector<int> &idx) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < idx.size(); ++i)
    out << (i ? "," : "") << idx[i];
  out << "]";
  return out.str();
}

template <class T>
CheckReport structure_impl(const CasoratiParams &p, const AlgebraSpec &spec,
                           const TTable &table) {
  using WT = typename FrameSet<T>::W;
  Stopwatch sw;
  CheckReport r;
  r.name = "casorati-structure";
  r.param("algebra", kind_name(spec.kind));
  r.param("n", std::to_string(spec.n));
  r.param("seed", std::to_string(p.seed));
  r.param("trials", std::to_string(p.trials));
  r.param("m_max", std::to_string(p.m_max));
  r.param("precision", p.precision == Precision::Double ? "double" : "high");

  const int N = spec.N;
  const int m_max = p.m_max;
  Worst worst;

  // Symbolic comparisons reused across trials.
  std::vector<std::pair<std::string, std::pair<LaurentPoly, LaurentPoly>>> mnnsy;
  std::vector<std::vector<int>> sets = mnnsy_index_sets(N);
  for (const auto &idx : sets) {
    YoungData data = YoungData::from_indices(idx);
    mnnsy.emplace_back(index_str(idx),
                       std::make_pair(mnnsy_det(table, data, Shift()),
                                      tableaux_sum(spec, data, Shift())));
  }

  run_trials<T>(p, spec, m_max, [&](const NumericModel<T> &model,
                                    const FrameSet<T> &frames, std::uint64_t s) {
    // Quasi-periodicity of the sinh model.
    for (int a = 1; a <= spec.n; ++a) {
      CNum<T> v = model.point(sh(0, Rat(1, 7)));
      CNum<T> lhs = model.eval_Q(a, CNum<T>(v.re, T(v.im + model.t_imag())));
      CNum<T> rhs = model.eval_Q(a, v);
      if (model.unit_sign(a) < 0)
        rhs = -rhs;
      worst.note("sinh model quasi-periodicity", rel_err(lhs, rhs));
    }

    // w_1 recursion ratio and kernel residuals of the filtered basis.
    for (int eps = 0; eps < 2; ++eps)
      for (int p0 = 0; p0 < 2; ++p0) {
        int k = (frames.k_min() + frames.k_max()) / 2;
        CNum<WT> ratio = frames.basis(eps, p0, 1, k + 1) / frames.basis(eps, p0, 1, k);
        worst.note("w_1 first-order recursion",
                   rel_err(ratio, frames.x_cached(eps, p0, N + 1, k)));
        for (int b = 1; b <= N + 1; ++b)
          worst.note("kernel residual L_b w_b",
                     to_double(frames.kernel_residual(eps, p0, b)));
      }

    // Relation (shift): [0..N] = [1..N+1].
    std::vector<int> left(N + 1), right(N + 1);
    for (int i = 0; i <= N; ++i) {
      left[i] = i;
      right[i] = i + 1;
    }
    for (int d = 0; d <= 4; ++d)
      worst.note("shift relation [0..N]=[1..N+1]",
                 scaled_rel_err(frames.xi(left, sh(d)), frames.xi(right, sh(d))));

    // Prop. ta1 against the symbolic T-table.
    for (int a = 0; a <= N + 1; ++a) {
      for (int d = 0; d <= 4; ++d) {
        std::vector<int> idx;
        for (int i = 0; i <= N + 1; ++i)
          if (i != a)
            idx.push_back(i);
        CNum<WT> ratio = scaled_ratio(frames.xi(idx, sh(d)), frames.xi(left, sh(d)));
        CNum<T> expect = model.eval(table.T_upper(a), model.point(sh(d + a)));
        worst.note("ta1 a=" + std::to_string(a), rel_err(ratio, widen<WT>(expect)));
      }
    }

    // Pluecker relation.
    for (int a = 1; a <= N; ++a)
      for (int m = 1; m <= m_max; ++m)
        for (int d = 0; d <= 1; ++d) {
          auto t1 = scaled_mul(frames.xi_am(a, m, sh(d)), frames.xi_am(a, m, sh(d + 2)));
          auto t2 = scaled_mul(frames.xi_am(a, m + 1, sh(d)),
                               frames.xi_am(a, m - 1, sh(d + 2)));
          auto t3 = scaled_mul(frames.xi_am(a + 1, m, sh(d)),
                               frames.xi_am(a - 1, m, sh(d + 2)));
          using std::exp;
          WT lead = std::max({t1.logmag, t2.logmag, t3.logmag});
          CNum<WT> v1 = t1.mant * CNum<WT>(exp(WT(t1.logmag - lead)), WT(0));
          CNum<WT> v2 = t2.mant * CNum<WT>(exp(WT(t2.logmag - lead)), WT(0));
          CNum<WT> v3 = t3.mant * CNum<WT>(exp(WT(t3.logmag - lead)), WT(0));
          double scale = std::max({to_double(abs_value(v1)), to_double(abs_value(v2)),
                                   to_double(abs_value(v3)), 1e-300});
          double res = to_double(abs_value(v1 - v2 - v3)) / scale;
          worst.note("pluecker a=" + std::to_string(a) + " m=" + std::to_string(m),
                     res);
        }

    // Lemma dual-Ca across the two frame families.
    for (int a = 0; a <= N + 1; ++a)
      for (int m = 1; m <= m_max; ++m) {
        CNum<WT> lhs = scaled_ratio(frames.xi_am(a, m, sh(0)), frames.xi_am(0, 0, sh(0)));
        Shift basis2 = sh(2 * a - N - 1, kHalf);
        CNum<WT> rhs = scaled_ratio(frames.xi_am(N - a + 1, m, basis2),
                                    frames.xi_am(0, 0, basis2));
        worst.note("dual-ca a=" + std::to_string(a) + " m=" + std::to_string(m),
                   rel_err(lhs, rhs));
      }

    // Lemma m-nnsy: Casorati ratio vs determinant vs tableaux sum.
    for (std::size_t si = 0; si < sets.size(); ++si) {
      for (int d = 0; d <= 1; ++d) {
        CNum<T> det_val = model.eval(mnnsy[si].second.first, model.point(sh(d)));
        CNum<T> tab_val = model.eval(mnnsy[si].second.second, model.point(sh(d)));
        worst.note("mnnsy det=tableaux " + mnnsy[si].first,
                   rel_err(det_val, tab_val));
        CNum<WT> ratio = scaled_ratio(frames.xi(sets[si], sh(d)), frames.xi(left, sh(d)));
        worst.note("mnnsy ratio=det " + mnnsy[si].first,
                   rel_err(ratio, widen<WT>(det_val)));
      }
    }

    // Ratio invariance under re-randomized cascade constants.
    FrameSet<T> other(model, s ^ 0x5151515151ULL, window_min(spec, m_max),
                      window_max(spec, m_max));
    for (int a = 1; a <= std::min(spec.n + 1, N); ++a)
      for (int m = 1; m <= m_max; ++m) {
        CNum<WT> r1 = scaled_ratio(frames.xi_am(a, m, sh(0)), frames.xi_am(0, 0, sh(0)));
        CNum<WT> r2 = scaled_ratio(other.xi_am(a, m, sh(0)), other.xi_am(0, 0, sh(0)));
        worst.note("basis independence a=" + std::to_string(a) +
                       " m=" + std::to_string(m),
                   rel_err(r1, r2));
      }
  });

  // Tolerances: identity checks at p.tolerance; construction residuals
  // tighter, per their own statements.
  for (const auto &label : worst.order) {
    double err = worst.items.at(label);
    double tol = p.tolerance;
    if (label == "w_1 first-order recursion")
      tol = 1e-12;
    else if (label == "kernel residual L_b w_b")
      tol = 1e-9;
    else if (label == "sinh model quasi-periodicity")
      tol = 1e-12;
    auto &item = r.add(label, err <= tol);
    item.residual = err;
  }
  r.wall_ms = sw.ms();
  return r;
}

template <class T>
CheckReport triple_impl(const CasoratiParams &p, const AlgebraSpec &spec,
                        const TTable &table) {
  using WT = typename FrameSet<T>::W;
  Stopwatch sw;
  CheckReport r;
  r.name = "triple-agreement";
  r.param("algebra", kind_name(spec.kind));
  r.param("n", std::to_string(spec.n));
  r.param("seed", std::to_string(p.seed));
  r.param("trials", std::to_string(p.trials));
  r.param("m_max", std::to_string(p.m_max));
  r.param("precision", p.precision == Precision::Double ? "double" : "high");

  const int a_max = p.a_max > 0 ? std::min(p.a_max, spec.n) : spec.n;

  std::map<std::pair<int, int>, LaurentPoly> jt;
  for (int a = 1; a <= a_max; ++a)
    for (int m = 1; m <= p.m_max; ++m) {
      jt[{a, m}] = jacobi_trudi(table, a, m, Shift());
      LaurentPoly tab = tableaux_sum(spec, YoungData::rectangle(spec.N, a, m),
                                     sh(-(a + m - 1)));
      LaurentPoly residual = tab - jt[{a, m}];
      auto &item = r.add("tableaux = jacobi-trudi a=" + std::to_string(a) +
                             " m=" + std::to_string(m),
                         residual.is_zero());
      if (!item.ok)
        item.detail = "residual: " + to_string(residual);
    }

  Worst worst;
  run_trials<T>(p, spec, p.m_max + 1,
                [&](const NumericModel<T> &model, const FrameSet<T> &frames,
                    std::uint64_t) {
                  for (int a = 1; a <= a_max; ++a)
                    for (int m = 1; m <= p.m_max; ++m)
                      for (int d = 0; d <= 2; ++d) {
                        CNum<WT> casorati = frames.casorati_T(a, m, sh(d));
                        CNum<T> symbolic =
                            model.eval(jt[{a, m}], model.point(sh(d)));
                        worst.note("casorati = jacobi-trudi a=" + std::to_string(a) +
                                       " m=" + std::to_string(m),
                                   rel_err(casorati, widen<WT>(symbolic)));
                      }
                });
  worst.emit(r, p.tolerance);
  r.wall_ms = sw.ms();
  return r;
}

template <class T>
CheckReport tsys_numeric_impl(const CasoratiParams &p, const AlgebraSpec &spec) {
  using WT = typename FrameSet<T>::W;
  Stopwatch sw;
  CheckReport r;
  r.name = "tsystem-numeric";
  r.param("algebra", kind_name(spec.kind));
  r.param("n", std::to_string(spec.n));
  r.param("seed", std::to_string(p.seed));
  r.param("trials", std::to_string(p.trials));
  r.param("m_max", std::to_string(p.m_max));
  r.param("precision", p.precision == Precision::Double ? "double" : "high");

  const int a_max = p.a_max > 0 ? std::min(p.a_max, spec.n) : spec.n;

  Worst worst;
  run_trials<T>(p, spec, p.m_max + 2, [&](const NumericModel<T> &,
                                          const FrameSet<T> &frames, std::uint64_t) {
    for (int a = 1; a <= a_max; ++a)
      for (int m = 1; m <= p.m_max; ++m)
        for (int d = 0; d <= 2; ++d) {
          CNum<WT> lhs = frames.casorati_T(a, m, sh(d - 1)) *
                         frames.casorati_T(a, m, sh(d + 1));
          CNum<WT> t1 = frames.casorati_T(a, m - 1, sh(d)) *
                        frames.casorati_T(a, m + 1, sh(d));
          CNum<WT> t2;
          if (a < spec.n) {
            t2 = frames.casorati_T(a - 1, m, sh(d)) *
                 frames.casorati_T(a + 1, m, sh(d));
          } else if (spec.kind == AlgebraKind::A2Even) {
            t2 = frames.casorati_T(spec.n - 1, m, sh(d)) *
                 frames.casorati_T(spec.n, m, sh(d, kHalf));
          } else {
            t2 = frames.casorati_T(spec.n - 1, m, sh(d)) *
                 frames.casorati_T(spec.n - 1, m, sh(d, kHalf));
          }
          double scale = std::max({to_double(abs_value(lhs)), to_double(abs_value(t1)),
                                   to_double(abs_value(t2)), 1e-300});
          double res = to_double(abs_value(lhs - t1 - t2)) / scale;
          worst.note("a=" + std::to_string(a) + " m=" + std::to_string(m), res);
        }
  });
  worst.emit(r, p.tolerance);
  r.wall_ms = sw.ms();
  return r;
}

AlgebraSpec casorati_spec(const CasoratiParams &p) {
  AlgebraSpec spec = make_algebra(p.kind, p.n);
  if (!spec.is_A2())
    throw std::invalid_argument(
        "Casorati checks exist for the A2 families only");
  return spec;
}

TTable casorati_table(const AlgebraSpec &spec) {
  return extract_T(spec, build_L(spec, 0));
}

} // namespace

CheckReport check_casorati_structure(const CasoratiParams &p) {
  AlgebraSpec spec = casorati_spec(p);
  TTable table = casorati_table(spec);
  return p.precision == Precision::Double
             ? structure_impl<double>(p, spec, table)
             : structure_impl<BigFloat>(p, spec, table);
}

CheckReport check_triple_agreement(const CasoratiParams &p) {
  AlgebraSpec spec = casorati_spec(p);
  TTable table = casorati_table(spec);
  return p.precision == Precision::Double ? triple_impl<double>(p, spec, table)
                                          : triple_impl<BigFloat>(p, spec, table);
}

CheckReport check_tsystem_numeric(const CasoratiParams &p) {
  AlgebraSpec spec = casorati_spec(p);
  return p.precision == Precision::Double
             ? tsys_numeric_impl<double>(p, spec)
             : tsys_numeric_impl<BigFloat>(p, spec);
}

} // namespace tsyslab
