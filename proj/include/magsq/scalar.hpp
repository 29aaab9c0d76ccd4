#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace magsq {

// Exact coefficient type for the structural layer.  All structure constants
// are +-1, so every identity below the numeric layer is decidable in Rational.
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& x) { return x.sign() == 0; }
inline bool is_zero(double x) { return x == 0.0; }

inline double to_double(const Rational& x) { return x.convert_to<double>(); }
inline double to_double(double x) { return x; }

}  // namespace magsq
