// Exact rational scalars. Everything in the engine that claims to be exact
// bottoms out in this type.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace mxop {

using BigInt = boost::multiprecision::cpp_int;
// Expression templates off: Rat behaves as a plain value type in containers
// and in the Mat<T>/Poly templates.
using Rat = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                          boost::multiprecision::et_off>;

inline BigInt rat_num(const Rat& x) { return numerator(x); }
inline BigInt rat_den(const Rat& x) { return denominator(x); }

inline int rat_sign(const Rat& x) { return x.sign(); }

inline bool rat_is_integer(const Rat& x) { return rat_den(x) == 1; }

inline double rat_to_double(const Rat& x) { return x.convert_to<double>(); }

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

Rat rat_pow(const Rat& x, long e);

// Accepts "p", "-p", "p/q" with optional sign on p; q > 0 after parsing.
Rat rat_parse(const std::string& s);

// Canonical form: "p" when the denominator is 1, else "p/q" with q > 0.
std::string rat_str(const Rat& x);

// Largest integer <= x.
BigInt rat_floor(const Rat& x);

}  // namespace mxop
