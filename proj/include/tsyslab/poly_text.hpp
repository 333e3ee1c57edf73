#ifndef TSYSLAB_POLY_TEXT_HPP
#define TSYSLAB_POLY_TEXT_HPP

#include "tsyslab/ring.hpp"

#include <stdexcept>
#include <string>

namespace tsyslab {

// Canonical text form of a polynomial in the grammar
//   poly := term ((+|-) term)*
//   term := int? (sym (^int)?)('*' sym (^int)?)*
//   sym  := ('Q'|'Y'|'h') '[' int ']' ('(' 'u' shifttext ')')?
// with shifttext e.g. "+3/2+1/2t". Terms are ordered by their symbol
// sequence (family, index, shift.p, shift.q ascending; exponents
// descending on ties), so equal polynomials print identically.
std::string to_string(const LaurentPoly &p);

struct ParseError : std::runtime_error {
  int column; // 1-based position of the offending character
  ParseError(int col, const std::string &what)
      : std::runtime_error("syntax error at column " + std::to_string(col) +
                           ": " + what),
        column(col) {}
};

// Parses the grammar above; symbol shifts are canonicalized on the way in
// (whole t-periods of Q symbols become h units), so print(parse(x)) is
// the canonical form of x.
LaurentPoly parse_poly(const std::string &text);

} // namespace tsyslab

#endif
