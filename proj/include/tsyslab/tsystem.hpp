#ifndef TSYSLAB_TSYSTEM_HPP
#define TSYSLAB_TSYSTEM_HPP

#include "tsyslab/diffop.hpp"
#include "tsyslab/report.hpp"

#include <vector>

namespace tsyslab {

// Index set / Young diagram dictionary: strictly increasing integers
// 0 = i_0 < i_1 < ... < i_N define the partition mu with
// mu_k = i_{N+1-k} + k - N - 1 and the skew shape (mu_1^{N+1})/mu.
// Cells carry the coordinates of the tableaux sum: (1,1) bottom left,
// row index j increasing upwards.
struct YoungData {
  std::vector<int> indices; // i_0..i_N
  std::vector<int> mu;      // mu_1..mu_{N+1}, weakly decreasing, >= 0
  std::vector<int> mu_conj; // transpose, mu'_1..mu'_{mu_1}
  int mu1 = 0;

  static YoungData from_indices(const std::vector<int> &indices);
  // Index set {0..a-1, a+m..N+m} whose shape is the a x m rectangle.
  static YoungData rectangle(int N, int a, int m);

  int rows() const { return static_cast<int>(mu.size()); } // N+1
  // Columns occupied in paper-row j (1-based, from the bottom).
  int row_begin(int j) const { return mu[mu.size() - j] + 1; }
  int row_end(int) const { return mu1; }
  int cell_count() const;
};

// Boundary-extended T: 0 outside [0, N+1], 1 at 0 and N+1, else
// T^a(u + s) from the table. A2 families only.
LaurentPoly script_T(const TTable &table, int a, const Shift &s);

// T^{(a)}_m(u+s) = det(script_T^{a-j+k}(u+s+j+k-m-1)), size m x m.
LaurentPoly jacobi_trudi(const TTable &table, int a, int m, const Shift &s);

// Number of admissible skew tableaux on the shape.
long count_tableaux(const AlgebraSpec &spec, const YoungData &data);

// sum over semi-standard tableaux b of prod x_{b(j,k)}(u+base+2j+2k-4);
// entries weakly increase along rows and strictly decrease as the row
// index j grows (the convention matching the determinant forms).
LaurentPoly tableaux_sum(const AlgebraSpec &spec, const YoungData &data,
                         const Shift &base);

// The mu_1 x mu_1 determinant form of the same ratio:
// det(T^{mu'_j - j + k}(u + base + N - 1 + j + k - mu'_j + t/2)).
LaurentPoly mnnsy_det(const TTable &table, const YoungData &data,
                      const Shift &base);

// Symbolic verification of the T-system with T^{(a)}_m = jacobi_trudi.
CheckReport check_tsystem_symbolic(const TTable &table, int a_max, int m_max);

} // namespace tsyslab

#endif
