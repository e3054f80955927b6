#ifndef REEBCERT_EXACT_HPP
#define REEBCERT_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace reebcert {

// Every quantity in this project is an exact integer or an exact rational;
// there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Quotient rounded to the nearest integer (ties away from zero); the
// balanced remainder keeps pivots shrinking fast during elimination.
Int div_round_nearest(const Int& a, const Int& b);

// x reduced into [0, m) for m > 0; returns x unchanged when m == 0.
Int mod_nonneg(const Int& x, const Int& m);

}  // namespace reebcert

#endif
