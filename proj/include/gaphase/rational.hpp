#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gaphase {

// Exact coefficient type. Arbitrary precision so long product chains never
// overflow; always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

}  // namespace gaphase
