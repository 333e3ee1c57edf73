#ifndef TSYSLAB_SHIFT_HPP
#define TSYSLAB_SHIFT_HPP

#include "tsyslab/numbers.hpp"

namespace tsyslab {

// Families of formal symbols. Q symbols are quasi-periodic,
// Q_a(u + t) = h_a Q_a(u); Y symbols are periodic, Y_a(u + t) = Y_a(u),
// where t stands for pi*i/hbar.
enum class Family { Q, Y };

// Degenerate mode: formally set pi*i/(r*hbar) = 0. When enabled, the
// t-component of every Shift is forced to zero at construction.
bool theta_zero_mode();
void set_theta_zero_mode(bool on);

struct ThetaZeroGuard {
  bool prev;
  explicit ThetaZeroGuard(bool on) : prev(theta_zero_mode()) {
    set_theta_zero_mode(on);
  }
  ~ThetaZeroGuard() { set_theta_zero_mode(prev); }
};

// An exact argument offset u + p + q*t on the shift lattice.
struct Shift {
  Rat p; // real displacement
  Rat q; // displacement in units of t = pi*i/hbar

  Shift() : p(0), q(0) {}
  Shift(Rat p_, Rat q_) : p(std::move(p_)), q(std::move(q_)) {
    if (theta_zero_mode())
      q = 0;
  }
  Shift(long p_, long q_) : Shift(Rat(p_), Rat(q_)) {}

  Shift operator+(const Shift &o) const { return Shift(Rat(p + o.p), Rat(q + o.q)); }
  Shift operator-(const Shift &o) const { return Shift(Rat(p - o.p), Rat(q - o.q)); }

  bool operator==(const Shift &o) const { return p == o.p && q == o.q; }
  bool operator!=(const Shift &o) const { return !(*this == o); }
  bool operator<(const Shift &o) const {
    if (p != o.p)
      return p < o.p;
    return q < o.q;
  }
  bool is_zero() const { return p == 0 && q == 0; }
};

inline Shift shift_add(const Shift &a, const Shift &b) { return a + b; }

// Canonical form of a symbol argument: q reduced into [0,1).
// For the Q family the discarded whole periods are returned as a power of
// the quasi-periodicity unit h_a; the Y family is genuinely periodic.
struct Canonicalization {
  Shift shift;
  long unit_power;
};

inline Canonicalization canonicalize(Family family, const Shift &s) {
  Int k = rat_floor(s.q);
  Shift reduced(s.p, Rat(s.q - Rat(k)));
  long units = family == Family::Q ? static_cast<long>(k) : 0;
  return Canonicalization{reduced, units};
}

// Text form of a shift as it appears inside a symbol argument,
// e.g. "+3/2+1/2t"; the zero shift yields an empty string.
std::string shift_text(const Shift &s);

} // namespace tsyslab

#endif
