#ifndef TSYSLAB_NUMBERS_HPP
#define TSYSLAB_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace tsyslab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// floor(x) as an exact integer, correct for negative rationals.
inline Int rat_floor(const Rat &x) {
  Int num = numerator(x);
  Int den = denominator(x); // > 0, lowest terms
  Int q = num / den;
  if (num < 0 && q * den != num)
    --q;
  return q;
}

inline std::string rat_str(const Rat &x) {
  Int num = numerator(x);
  Int den = denominator(x);
  if (den == 1)
    return num.str();
  return num.str() + "/" + den.str();
}

} // namespace tsyslab

#endif
