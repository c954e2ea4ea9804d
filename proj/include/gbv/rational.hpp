#pragma once

#include <gmpxx.h>

#include <string>

namespace gbv {

// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
// denominator), so structural equality of normal forms is exact equality.
using Rational = mpq_class;

inline bool rat_is_zero(const Rational& r) { return sgn(r) == 0; }

inline std::string rat_to_string(const Rational& r) { return r.get_str(); }

}  // namespace gbv
