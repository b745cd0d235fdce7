#ifndef SO3FIVE_QSQRT3_HPP
#define SO3FIVE_QSQRT3_HPP

#include <optional>
#include <string>

#include "so3five/rational.hpp"

namespace so3five {

// Element a + b*sqrt(3) of the real quadratic field Q(sqrt 3).
// Equality is componentwise: sqrt(3) is irrational, so a + b*sqrt(3) = 0
// iff a = b = 0, and the representation (a, b) is unique.
struct QSqrt3 {
    Rational a; // rational part
    Rational b; // coefficient of sqrt(3)

    QSqrt3() : a(0), b(0) {}
    QSqrt3(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}
    explicit QSqrt3(Rational ra) : a(std::move(ra)), b(0) {}
    explicit QSqrt3(long n) : a(n), b(0) {}

    static QSqrt3 zero() { return QSqrt3(); }
    static QSqrt3 one() { return QSqrt3(Rational(1)); }
    static QSqrt3 sqrt3() { return QSqrt3(Rational(0), Rational(1)); }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }
    bool is_one() const { return a == 1 && b == 0; }

    friend bool operator==(const QSqrt3& x, const QSqrt3& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const QSqrt3& x, const QSqrt3& y) { return !(x == y); }

    QSqrt3 operator-() const { return QSqrt3(-a, -b); }

    friend QSqrt3 operator+(const QSqrt3& x, const QSqrt3& y) {
        return QSqrt3(x.a + y.a, x.b + y.b);
    }
    friend QSqrt3 operator-(const QSqrt3& x, const QSqrt3& y) {
        return QSqrt3(x.a - y.a, x.b - y.b);
    }
    friend QSqrt3 operator*(const QSqrt3& x, const QSqrt3& y) {
        // (a + b s)(c + d s) = ac + 3bd + (ad + bc) s  with s^2 = 3
        return QSqrt3(x.a * y.a + 3 * x.b * y.b, x.a * y.b + x.b * y.a);
    }

    QSqrt3& operator+=(const QSqrt3& y) { return *this = *this + y; }
    QSqrt3& operator-=(const QSqrt3& y) { return *this = *this - y; }
    QSqrt3& operator*=(const QSqrt3& y) { return *this = *this * y; }

    // Field norm a^2 - 3 b^2; zero only for the zero element.
    Rational norm() const { return a * a - 3 * b * b; }

    QSqrt3 inverse() const;
    friend QSqrt3 operator/(const QSqrt3& x, const QSqrt3& y) {
        return x * y.inverse();
    }

    // Exact sign of the real number a + b*sqrt(3): -1, 0 or +1.
    int sign() const;

    // True for a > 0, or a = 0 and b > 0. Used to pick a deterministic
    // representative out of a +/- pair; not the same as sign() > 0.
    bool lex_positive() const { return a > 0 || (a == 0 && b > 0); }

    std::string to_string() const;
};

// Exact square root inside the field, or nullopt when none exists.
// When a root exists, the returned value y has y.sign() >= 0.
std::optional<QSqrt3> qsqrt3_sqrt(const QSqrt3& x);

} // namespace so3five

#endif
