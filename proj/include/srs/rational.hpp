#pragma once

// Exact arithmetic used throughout: arbitrary-precision integers and
// rationals. Bound values such as m^m/(m^m-(m-1)^m) overflow 128-bit
// integers already near m = 30, so all certified quantities are kept
// exact and only converted to double for display.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace srs {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

// floor(a/b) for b > 0
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline Int rat_floor(const Rat& r) { return floor_div(num(r), den(r)); }
inline Int rat_ceil(const Rat& r) { return ceil_div(num(r), den(r)); }

inline Int ipow(Int base, unsigned exp) {
    Int out = 1;
    while (exp) {
        if (exp & 1u) out *= base;
        base *= base;
        exp >>= 1u;
    }
    return out;
}

// Parses "p", "p/q" or "a.b" decimal notation into an exact rational.
Rat parse_rat(const std::string& text);

// Canonical "p" or "p/q" form, exact round-trip with parse_rat.
std::string rat_str(const Rat& r);

}  // namespace srs
