#pragma once

// Exact integer and rational arithmetic used everywhere in the library.
// No certified value is ever computed through floating point; comparisons
// against irrational quantities (square roots) are decided by squaring.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

#include "curvedim/errors.hpp"

namespace curvedim {

using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (maintained by the backend on every operation).
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Floor division for any signs, b != 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

/// Ceiling division for any signs, b != 0.
inline Int ceil_div(const Int& a, const Int& b) {
    return -floor_div(-a, b);
}

/// Floor of sqrt(n), n >= 0.
inline Int isqrt(const Int& n) {
    if (n < 0) throw DomainError("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

/// Exact factorial, n >= 0.
inline Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

/// Binomial coefficient with the falling-factorial convention:
/// C(n, k) = n(n-1)...(n-k+1)/k! for any integer n (negative included).
inline Int binomial(const Int& n, unsigned k) {
    Int num = 1;
    for (unsigned i = 0; i < k; ++i) num *= n - i;
    return num / factorial(k); // falling factorials are divisible by k!
}

namespace detail {

// Decide q * (b + sqrt(c)) <= a with integer arithmetic only.
inline bool times_root_le(const Int& q, const Int& a, const Int& b, const Int& c) {
    const Int x = a - q * b; // want q * sqrt(c) <= x
    if (q >= 0) {
        if (x < 0) return false;
        return q * q * c <= x * x;
    }
    if (x >= 0) return true;
    return x * x <= q * q * c;
}

} // namespace detail

/// Exact integer floor of a / (b + sqrt(c)).
///
/// Requires c >= 0 and b + sqrt(c) > 0; both are verified exactly and a
/// DomainError is thrown otherwise.  The result is the unique q with
/// q <= a/(b + sqrt(c)) < q + 1, found by squaring-based comparisons,
/// so floor boundaries are never blurred by rounding.
inline Int floor_sqrt_expr(const Int& a, const Int& b, const Int& c) {
    if (c < 0) throw DomainError("floor_sqrt_expr: negative radicand");
    if (b >= 0) {
        if (b == 0 && c == 0) throw DomainError("floor_sqrt_expr: zero denominator");
    } else if (c <= b * b) {
        throw DomainError("floor_sqrt_expr: denominator not positive");
    }
    if (a == 0) return 0;

    const Int s = isqrt(c);
    if (s * s == c) return floor_div(a, b + s); // rational denominator

    auto le = [&](const Int& q) { return detail::times_root_le(q, a, b, c); };

    // Bracket the quotient.  s < sqrt(c) < s+1, so b+s and b+s+1 straddle
    // the true denominator.
    Int lo, hi;
    const Int den_lo = b + s;
    const Int den_hi = b + s + 1;
    if (den_lo >= 1) {
        if (a > 0) {
            lo = floor_div(a, den_hi);
            hi = floor_div(a, den_lo);
        } else {
            lo = floor_div(a, den_lo);
            hi = floor_div(a, den_hi);
        }
    } else {
        // 0 < b + sqrt(c) < 1 here, so b <= 0 and c > b^2.  Then
        // b + sqrt(c) >= (c - b^2) / (s + 1 - b), which bounds |q|.
        const Int mag = floor_div(abs(a) * (s + 1 - b), c - b * b) + 1;
        lo = -mag;
        hi = mag;
    }

    // Largest q in [lo, hi] with q*(b+sqrt(c)) <= a.
    while (lo < hi) {
        Int mid = lo + (hi - lo + 1) / 2;
        if (le(mid)) lo = mid;
        else hi = mid - 1;
    }
    return lo;
}

/// Decimal rendering of a rational to `digits` fractional digits,
/// round-half-up on the magnitude.  Display only; exact values stay p/q.
inline std::string decimal_string(const Rational& value, unsigned digits = 12) {
    Int p = rat_num(value);
    const Int q = rat_den(value);
    const bool neg = p < 0;
    if (neg) p = -p;
    Int pow10 = 1;
    for (unsigned i = 0; i < digits; ++i) pow10 *= 10;
    const Int scaled = (2 * p * pow10 + q) / (2 * q);
    const Int whole = scaled / pow10;
    const Int frac = scaled % pow10;
    std::string fs = frac.str();
    fs.insert(fs.begin(), digits - fs.size(), '0');
    std::string out = whole.str();
    if (digits > 0) out += "." + fs;
    if (neg && scaled != 0) out.insert(out.begin(), '-');
    return out;
}

/// Decimal rendering of sqrt(num/den) to `digits` fractional digits
/// (truncated).  num >= 0, den > 0.  Display only.
inline std::string decimal_sqrt_string(const Int& num, const Int& den, unsigned digits = 12) {
    if (num < 0 || den <= 0) throw DomainError("decimal_sqrt_string: invalid ratio");
    Int pow10 = 1;
    for (unsigned i = 0; i < digits; ++i) pow10 *= 10;
    const Int scaled = isqrt(num * pow10 * pow10 / den);
    const Int whole = scaled / pow10;
    const Int frac = scaled % pow10;
    std::string fs = frac.str();
    fs.insert(fs.begin(), digits - fs.size(), '0');
    std::string out = whole.str();
    if (digits > 0) out += "." + fs;
    return out;
}

} // namespace curvedim
