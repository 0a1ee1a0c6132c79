#pragma once

// Exact arithmetic over Q[sqrt(2)], i.e. numbers a + b*sqrt(2) with
// rational a, b. The bound (1+sqrt(2))/2 and the profile function built
// from it live in this field, so bag sizes derived from them can be
// compared and floored without floating-point error.

#include "srs/rational.hpp"

#include <cmath>
#include <ostream>

namespace srs {

struct Root2 {
    Rat a;  // rational part
    Rat b;  // coefficient of sqrt(2)

    Root2() : a(0), b(0) {}
    Root2(Rat rational_part) : a(std::move(rational_part)), b(0) {}  // NOLINT: implicit by design
    Root2(long long v) : a(v), b(0) {}                               // NOLINT
    Root2(Rat ra, Rat rb) : a(std::move(ra)), b(std::move(rb)) {}

    bool is_rational() const { return b == 0; }

    Root2 operator-() const { return {-a, -b}; }
    Root2& operator+=(const Root2& o) { a += o.a; b += o.b; return *this; }
    Root2& operator-=(const Root2& o) { a -= o.a; b -= o.b; return *this; }

    friend Root2 operator+(Root2 x, const Root2& y) { return x += y; }
    friend Root2 operator-(Root2 x, const Root2& y) { return x -= y; }

    friend Root2 operator*(const Root2& x, const Root2& y) {
        return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    Root2& operator*=(const Root2& o) { return *this = *this * o; }

    friend Root2 operator/(const Root2& x, const Root2& y) {
        // multiply by the conjugate; c^2 - 2 d^2 != 0 unless y == 0
        Rat norm = y.a * y.a - 2 * y.b * y.b;
        if (norm == 0) throw std::domain_error("Root2: division by zero");
        return {(x.a * y.a - 2 * x.b * y.b) / norm, (x.b * y.a - x.a * y.b) / norm};
    }
    Root2& operator/=(const Root2& o) { return *this = *this / o; }

    // -1, 0, +1. For mixed signs the comparison a ? -b*sqrt(2) is decided
    // by squaring, which is exact.
    int sign() const {
        const int sa = a == 0 ? 0 : (a > 0 ? 1 : -1);
        const int sb = b == 0 ? 0 : (b > 0 ? 1 : -1);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        Rat diff = a * a - 2 * b * b;
        if (diff == 0) return 0;  // only possible for a == b == 0
        return diff > 0 ? sa : sb;
    }

    friend bool operator<(const Root2& x, const Root2& y) { return (x - y).sign() < 0; }
    friend bool operator>(const Root2& x, const Root2& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const Root2& x, const Root2& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const Root2& x, const Root2& y) { return (x - y).sign() >= 0; }
    friend bool operator==(const Root2& x, const Root2& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Root2& x, const Root2& y) { return !(x == y); }

    double to_double() const {
        return srs::to_double(a) + srs::to_double(b) * std::sqrt(2.0);
    }

    friend std::ostream& operator<<(std::ostream& os, const Root2& x) {
        return os << x.to_double();
    }
};

// Exact floor; the double estimate is corrected by exact comparisons.
inline Int floor_exact(const Root2& x) {
    Int z(static_cast<long long>(std::floor(x.to_double())));
    while (x < Root2(Rat(z))) --z;
    while (x >= Root2(Rat(z + 1))) ++z;
    return z;
}

// (1 + sqrt(2)) / 2, the limit robustness bound for 0/1 speeds.
inline Root2 rho_zero_one_limit() { return {Rat(1, 2), Rat(1, 2)}; }

// 2 - sqrt(2), the breakpoint of the bag-size profile function.
inline Root2 profile_breakpoint() { return {Rat(2), Rat(-1)}; }

}  // namespace srs
