#include "tsyslab/algebra.hpp"

#include <stdexcept>

namespace tsyslab {

std::string kind_name(AlgebraKind kind) {
  switch (kind) {
  case AlgebraKind::A2Even:
    return "a2even";
  case AlgebraKind::A2Odd:
    return "a2odd";
  case AlgebraKind::D2:
    return "d2";
  case AlgebraKind::D34:
    return "d3_4";
  }
  return "?";
}

Rat AlgebraSpec::pairing(int a, int b) const {
  if (a < 1 || a > N || b < 1 || b > N)
    throw std::out_of_range("pairing: node index outside 1.." + std::to_string(N));
  if (a == b)
    return Rat(2);
  return adj[a][b] ? Rat(-1) : Rat(0);
}

int AlgebraSpec::incidence(int a, int b) const {
  Rat v = 2 * Rat(a == b ? 1 : 0) - 2 * pairing(a, b) / pairing(a, a);
  return static_cast<int>(rat_floor(v));
}

AlgebraSpec make_algebra(AlgebraKind kind, int n) {
  AlgebraSpec s;
  s.kind = kind;
  s.n = n;
  switch (kind) {
  case AlgebraKind::A2Even:
    if (n < 1)
      throw std::invalid_argument("a2even requires n >= 1");
    s.N = 2 * n;
    s.r = 2;
    s.n_prime = n + 1;
    s.g = s.N + 1;
    break;
  case AlgebraKind::A2Odd:
    if (n < 2)
      throw std::invalid_argument("a2odd requires n >= 2");
    s.N = 2 * n - 1;
    s.r = 2;
    s.n_prime = n;
    s.g = s.N + 1;
    break;
  case AlgebraKind::D2:
    if (n < 2)
      throw std::invalid_argument("d2 requires n >= 2");
    s.N = n + 1;
    s.r = 2;
    s.n_prime = n;
    break;
  case AlgebraKind::D34:
    if (n != 2)
      throw std::invalid_argument("d3_4 is defined for n = 2 only");
    s.N = 4;
    s.r = 3;
    s.n_prime = n;
    break;
  default:
    throw std::invalid_argument("unknown algebra kind");
  }

  s.adj.assign(s.N + 1, std::vector<bool>(s.N + 1, false));
  auto link = [&s](int a, int b) {
    s.adj[a][b] = true;
    s.adj[b][a] = true;
  };
  s.r_node.assign(s.N + 1, 1);

  switch (kind) {
  case AlgebraKind::A2Even:
    // X_N = A_2n, sigma(2n-a+1) = a: no fixed node, every r_a = 1.
    for (int a = 1; a < s.N; ++a)
      link(a, a + 1);
    break;
  case AlgebraKind::A2Odd:
    // X_N = A_{2n-1}, sigma(2n-a) = a: node n fixed.
    for (int a = 1; a < s.N; ++a)
      link(a, a + 1);
    s.r_node[n] = 2;
    break;
  case AlgebraKind::D2:
    // X_N = D_{n+1}: chain 1..n-1, fork nodes n and n+1 on node n-1.
    for (int a = 1; a + 1 <= n - 1; ++a)
      link(a, a + 1);
    link(n - 1, n);
    link(n - 1, n + 1);
    for (int a = 1; a <= n - 1; ++a)
      s.r_node[a] = 2;
    break;
  case AlgebraKind::D34:
    // X_N = D_4 with center node 2; sigma permutes 1 -> 3 -> 4 -> 1.
    link(1, 2);
    link(2, 3);
    link(2, 4);
    s.r_node[2] = 3;
    break;
  }
  return s;
}

int r_ab(const AlgebraSpec &spec, int a, int b) {
  if (a < 1 || a > spec.n_prime || b < 1 || b > spec.n_prime)
    throw std::out_of_range("r_ab: index outside 1..n_prime");
  return std::max(spec.r_node[a], spec.r_node[b]);
}

} // namespace tsyslab
