#pragma once

#include <gmpxx.h>

#include <string>

namespace alcove {

using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline std::string to_string(const Rational& x) { return x.get_str(); }

inline std::string numerator_string(const Rational& x) { return x.get_num().get_str(); }
inline std::string denominator_string(const Rational& x) { return x.get_den().get_str(); }

}  // namespace alcove
