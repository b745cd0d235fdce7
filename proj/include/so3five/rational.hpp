#ifndef SO3FIVE_RATIONAL_HPP
#define SO3FIVE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "so3five/errors.hpp"

namespace so3five {

// Arbitrary-precision integers and rationals. cpp_rational keeps the
// canonical form we require: gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& q) { return numerator(q); }
inline Int rat_den(const Rational& q) { return denominator(q); }

// Sign-safe construction; the cpp_rational (n, d) constructor rejects d < 0.
inline Rational make_rational(Int num, Int den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline std::string rational_to_string(const Rational& q) { return q.str(); }

// Exact square root, or nullopt when q is not a square in Q.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) {
        return std::nullopt;
    }
    const Int n = rat_num(q);
    const Int d = rat_den(q);
    const Int rn = boost::multiprecision::sqrt(n);
    const Int rd = boost::multiprecision::sqrt(d);
    if (rn * rn != n || rd * rd != d) {
        return std::nullopt;
    }
    return Rational(rn, rd);
}

inline int rational_sign(const Rational& q) {
    if (q > 0) return 1;
    if (q < 0) return -1;
    return 0;
}

} // namespace so3five

#endif
