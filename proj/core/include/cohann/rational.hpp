#pragma once

#include <gmpxx.h>

#include <string>

namespace cohann {

using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace cohann
