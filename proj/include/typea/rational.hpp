#ifndef TYPEA_RATIONAL_HPP
#define TYPEA_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace typea {

// Exact scalars. cpp_rational keeps values in lowest terms with a positive
// denominator, which is exactly the invariant the matrix layer relies on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return numerator(r); }
inline Integer den(const Rational& r) { return denominator(r); }

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline std::string to_string(const Rational& r) { return r.str(); }

} // namespace typea

#endif
