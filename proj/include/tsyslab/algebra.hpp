#ifndef TSYSLAB_ALGEBRA_HPP
#define TSYSLAB_ALGEBRA_HPP

#include "tsyslab/numbers.hpp"

#include <string>
#include <vector>

namespace tsyslab {

// The four twisted algebras in scope. X_N is the underlying simple Lie
// algebra, sigma the diagram automorphism of order r, I_sigma = {1..n}
// the orbit set with the node enumeration of the D4^(3)/D^(2)/A^(2)
// diagrams (fork nodes last, sigma-fixed chain first).
enum class AlgebraKind { A2Even, A2Odd, D2, D34 };

std::string kind_name(AlgebraKind kind);

// Root data of one algebra: everything downstream modules need about the
// Dynkin diagram of X_N, the automorphism, and the twist multipliers.
struct AlgebraSpec {
  AlgebraKind kind;
  int n = 0;       // orbit count |I_sigma|
  int N = 0;       // rank of X_N
  int r = 0;       // twist order
  int n_prime = 0; // screening product bound
  int g = 0;       // dual Coxeter number, A2 families only (N+1)

  // Per-node twist multiplier r_a for a in I = {1..N}: r if sigma(a)=a,
  // else 1. Index 0 unused.
  std::vector<int> r_node;
  // Adjacency of the X_N Dynkin diagram, 1-based.
  std::vector<std::vector<bool>> adj;

  bool is_A2() const { return kind == AlgebraKind::A2Even || kind == AlgebraKind::A2Odd; }

  bool adjacent(int a, int b) const { return adj[a][b]; }

  // (alpha_a | alpha_b); all in-scope X_N are simply laced.
  Rat pairing(int a, int b) const;

  // Incidence matrix I_ab = 2 delta_ab - 2 (a|b)/(a|a).
  int incidence(int a, int b) const;

  int r_orbit(int a) const { return r_node[a]; }
};

// Builds the spec, rejecting kinds/ranks outside the paper's validity
// range (A2Even: n>=1, A2Odd: n>=2, D2: n>=2, D34: n=2).
AlgebraSpec make_algebra(AlgebraKind kind, int n);

// r_ab = max(r_a, r_b) for indices in {1..n_prime}.
int r_ab(const AlgebraSpec &spec, int a, int b);

} // namespace tsyslab

#endif
