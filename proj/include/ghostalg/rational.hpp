#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ghost {

using Rational = mpq_class;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace ghost
