#include "so3five/qsqrt3.hpp"

#include <sstream>

namespace so3five {

QSqrt3 QSqrt3::inverse() const {
    if (is_zero()) {
        throw DomainError("inverse of zero in Q(sqrt 3)");
    }
    // (a + b s)^-1 = (a - b s) / (a^2 - 3 b^2); the norm is nonzero for
    // every nonzero element because sqrt(3) is irrational.
    const Rational n = norm();
    return QSqrt3(a / n, -b / n);
}

int QSqrt3::sign() const {
    const int sa = rational_sign(a);
    const int sb = rational_sign(b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare |a| against |b| sqrt(3) via a^2 vs 3 b^2.
    const Rational lhs = a * a;
    const Rational rhs = 3 * b * b;
    if (lhs > rhs) return sa;
    if (lhs < rhs) return sb;
    // a^2 = 3 b^2 with a, b != 0 would make sqrt(3) rational.
    throw InconsistencyError("a^2 = 3 b^2 for nonzero a, b");
}

std::string QSqrt3::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream out;
    if (a != 0) {
        out << rational_to_string(a);
    }
    if (b != 0) {
        if (a != 0) {
            out << (b > 0 ? "+" : "-");
            const Rational mag = b > 0 ? b : Rational(-b);
            if (mag != 1) {
                out << rational_to_string(mag) << "*";
            }
            out << "s3";
        } else {
            if (b == 1) {
                out << "s3";
            } else if (b == -1) {
                out << "-s3";
            } else {
                out << rational_to_string(b) << "*s3";
            }
        }
    }
    return out.str();
}

std::optional<QSqrt3> qsqrt3_sqrt(const QSqrt3& x) {
    if (x.is_zero()) {
        return QSqrt3::zero();
    }
    if (x.sign() < 0) {
        return std::nullopt;
    }
    const Rational& p = x.a;
    const Rational& q = x.b;
    if (q == 0) {
        // Either sqrt(p) rational, or p = 3 v^2 giving v * s3.
        if (auto u = rational_sqrt(p)) {
            return QSqrt3(*u, Rational(0));
        }
        if (auto v = rational_sqrt(p / 3)) {
            return QSqrt3(Rational(0), *v);
        }
        return std::nullopt;
    }
    // y = u + v s with y^2 = x gives u^2 + 3 v^2 = p and 2 u v = q, hence
    // u^2 is a root of 4 t^2 - 4 p t + 3 q^2 = 0: t = (p +/- sqrt(p^2 - 3 q^2)) / 2.
    const auto disc = rational_sqrt(p * p - 3 * q * q);
    if (!disc) {
        return std::nullopt;
    }
    for (int branch = 0; branch < 2; ++branch) {
        const Rational t =
            branch == 0 ? Rational((p + *disc) / 2) : Rational((p - *disc) / 2);
        if (t < 0) {
            continue;
        }
        const auto u = rational_sqrt(t);
        if (!u || *u == 0) {
            continue;
        }
        const Rational v = q / (2 * *u);
        QSqrt3 y(*u, v);
        if (y * y == x) {
            return y.sign() >= 0 ? y : -y;
        }
    }
    return std::nullopt;
}

} // namespace so3five
