#include "tsyslab/tsystem.hpp"

#include "tsyslab/poly_text.hpp"

#include <chrono>
#include <functional>
#include <map>
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

} // namespace

YoungData YoungData::from_indices(const std::vector<int> &indices) {
  if (indices.empty() || indices.front() != 0)
    throw std::invalid_argument("index set must start with i_0 = 0");
  for (std::size_t k = 1; k < indices.size(); ++k)
    if (indices[k] <= indices[k - 1])
      throw std::invalid_argument("index set must be strictly increasing");
  YoungData d;
  d.indices = indices;
  const int N = static_cast<int>(indices.size()) - 1;
  d.mu.resize(N + 1);
  for (int k = 1; k <= N + 1; ++k)
    d.mu[k - 1] = indices[N + 1 - k] + k - N - 1;
  d.mu1 = d.mu[0];
  d.mu_conj.assign(d.mu1, 0);
  for (int j = 1; j <= d.mu1; ++j)
    for (int part : d.mu)
      if (part >= j)
        ++d.mu_conj[j - 1];
  return d;
}

YoungData YoungData::rectangle(int N, int a, int m) {
  std::vector<int> idx(N + 1);
  for (int b = 0; b <= N; ++b)
    idx[b] = b < a ? b : b + m;
  return from_indices(idx);
}

int YoungData::cell_count() const {
  int total = 0;
  for (int part : mu)
    total += mu1 - part;
  return total;
}

LaurentPoly script_T(const TTable &table, int a, const Shift &s) {
  const AlgebraSpec &spec = table.spec;
  if (!spec.is_A2())
    throw std::invalid_argument("script_T applies to the A2 families only");
  if (a < 0 || a > spec.N + 1)
    return LaurentPoly();
  if (a == 0 || a == spec.N + 1)
    return LaurentPoly::constant(1);
  return shift_all(table.T_upper(a), s);
}

namespace {

// Division-free determinant: expansion along rows with memoization on
// the set of unused columns.
LaurentPoly poly_det(const std::vector<std::vector<LaurentPoly>> &m) {
  const int n = static_cast<int>(m.size());
  if (n == 0)
    return LaurentPoly::constant(1);
  std::map<unsigned, LaurentPoly> memo;
  std::function<LaurentPoly(int, unsigned)> go = [&](int row,
                                                     unsigned used) -> LaurentPoly {
    if (row == n)
      return LaurentPoly::constant(1);
    auto it = memo.find(used);
    if (it != memo.end())
      return it->second;
    LaurentPoly acc;
    int parity = 0;
    for (int col = 0; col < n; ++col) {
      if (used & (1u << col))
        continue;
      if (!m[row][col].is_zero()) {
        LaurentPoly sub = m[row][col] * go(row + 1, used | (1u << col));
        if (parity % 2)
          acc -= sub;
        else
          acc += sub;
      }
      ++parity;
    }
    return memo.emplace(used, std::move(acc)).first->second;
  };
  return go(0, 0u);
}

} // namespace

LaurentPoly jacobi_trudi(const TTable &table, int a, int m, const Shift &s) {
  if (m < 0)
    return LaurentPoly();
  if (m == 0)
    return LaurentPoly::constant(1);
  if (a == 0)
    return LaurentPoly::constant(1); // T^{(0)}_m = 1
  std::vector<std::vector<LaurentPoly>> mat(m, std::vector<LaurentPoly>(m));
  for (int j = 1; j <= m; ++j)
    for (int k = 1; k <= m; ++k)
      mat[j - 1][k - 1] = script_T(table, a - j + k, s + sh(j + k - m - 1));
  return poly_det(mat);
}

namespace {

// Enumerates admissible fillings, visiting rows downward (j = N+1 .. 1)
// and columns left to right, so both neighbours of a cell are fixed
// before the cell itself.
void enumerate_fillings(const YoungData &d, int max_entry,
                        const std::function<void(const std::map<std::pair<int, int>, int> &)> &emit) {
  std::vector<std::pair<int, int>> cells;
  for (int j = d.rows(); j >= 1; --j)
    for (int k = d.row_begin(j); k <= d.row_end(j); ++k)
      cells.emplace_back(j, k);

  std::map<std::pair<int, int>, int> filling;
  std::function<void(std::size_t)> fill = [&](std::size_t i) {
    if (i == cells.size()) {
      emit(filling);
      return;
    }
    auto [j, k] = cells[i];
    int lo = 1;
    auto above = filling.find({j + 1, k});
    if (above != filling.end())
      lo = std::max(lo, above->second + 1); // strict down the column
    auto left = filling.find({j, k - 1});
    if (left != filling.end())
      lo = std::max(lo, left->second); // weak along the row
    for (int v = lo; v <= max_entry; ++v) {
      filling[{j, k}] = v;
      fill(i + 1);
    }
    filling.erase({j, k});
  };
  fill(0);
}

} // namespace

long count_tableaux(const AlgebraSpec &spec, const YoungData &data) {
  long count = 0;
  enumerate_fillings(data, spec.N + 1,
                     [&count](const std::map<std::pair<int, int>, int> &) { ++count; });
  return count;
}

LaurentPoly tableaux_sum(const AlgebraSpec &spec, const YoungData &data,
                         const Shift &base) {
  if (!spec.is_A2())
    throw std::invalid_argument("tableaux sums apply to the A2 families only");
  LaurentPoly out;
  enumerate_fillings(
      data, spec.N + 1,
      [&](const std::map<std::pair<int, int>, int> &filling) {
        LaurentPoly prod = LaurentPoly::constant(1);
        for (const auto &[jk, entry] : filling)
          prod *= x_var(spec, entry, base + sh(2 * jk.first + 2 * jk.second - 4));
        out += prod;
      });
  return out;
}

LaurentPoly mnnsy_det(const TTable &table, const YoungData &data,
                      const Shift &base) {
  const int N = table.spec.N;
  const int size = data.mu1;
  std::vector<std::vector<LaurentPoly>> mat(size, std::vector<LaurentPoly>(size));
  for (int j = 1; j <= size; ++j) {
    int mcj = data.mu_conj[j - 1];
    for (int k = 1; k <= size; ++k)
      mat[j - 1][k - 1] =
          script_T(table, mcj - j + k, base + sh(N - 1 + j + k - mcj, kHalf));
  }
  return poly_det(mat);
}

CheckReport check_tsystem_symbolic(const TTable &table, int a_max, int m_max) {
  Stopwatch sw;
  const AlgebraSpec &spec = table.spec;
  if (!spec.is_A2())
    throw std::invalid_argument("the T-system check applies to the A2 families only");
  CheckReport r;
  r.name = "tsystem";
  r.param("algebra", kind_name(spec.kind));
  r.param("n", std::to_string(spec.n));
  r.param("a_max", std::to_string(a_max));
  r.param("m_max", std::to_string(m_max));
  a_max = std::min(a_max, spec.n);
  for (int a = 1; a <= a_max; ++a) {
    for (int m = 1; m <= m_max; ++m) {
      LaurentPoly lhs = jacobi_trudi(table, a, m, sh(-1)) *
                        jacobi_trudi(table, a, m, sh(1));
      LaurentPoly rhs = jacobi_trudi(table, a, m - 1, Shift()) *
                        jacobi_trudi(table, a, m + 1, Shift());
      if (a < spec.n) {
        rhs += jacobi_trudi(table, a - 1, m, Shift()) *
               jacobi_trudi(table, a + 1, m, Shift());
      } else if (spec.kind == AlgebraKind::A2Even) {
        rhs += jacobi_trudi(table, spec.n - 1, m, Shift()) *
               jacobi_trudi(table, spec.n, m, Shift(Rat(0), kHalf));
      } else {
        rhs += jacobi_trudi(table, spec.n - 1, m, Shift()) *
               jacobi_trudi(table, spec.n - 1, m, Shift(Rat(0), kHalf));
      }
      LaurentPoly residual = lhs - rhs;
      auto &item = r.add("a=" + std::to_string(a) + " m=" + std::to_string(m),
                         residual.is_zero());
      if (!item.ok)
        item.detail = "residual: " + to_string(residual);
    }
  }
  r.wall_ms = sw.ms();
  return r;
}

} // namespace tsyslab
