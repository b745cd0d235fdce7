#ifndef SO3FIVE_MULTIPOLY_HPP
#define SO3FIVE_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "so3five/qsqrt3.hpp"
#include "so3five/varenv.hpp"

namespace so3five {

// Exponent vector: one entry per environment variable, in env order.
using Monomial = std::vector<std::uint32_t>;

// Multivariate polynomial over Q(sqrt 3) in canonical form: the term map
// never stores a zero coefficient, so equality of polynomials over equal
// environments is equality of term maps. The zero polynomial has an empty
// map. Any operation whose result would exceed total degree
// kMaxTotalDegree throws ResourceError; every computation in this library
// stays far below the cap, so hitting it means runaway misuse.
class MultiPoly {
public:
    static constexpr std::uint32_t kMaxTotalDegree = 24;

    static MultiPoly zero(EnvPtr env) { return MultiPoly(std::move(env)); }
    static MultiPoly constant(EnvPtr env, const QSqrt3& value);
    static MultiPoly constant(EnvPtr env, long value) {
        return constant(std::move(env), QSqrt3(value));
    }
    static MultiPoly variable(EnvPtr env, const std::string& name);

    const EnvPtr& env() const { return env_; }
    const std::map<Monomial, QSqrt3>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    // -1 for the zero polynomial.
    int total_degree() const;

    // Coefficient of an explicit monomial (zero when absent).
    QSqrt3 coefficient(const Monomial& m) const;
    // The constant value when the polynomial has degree <= 0.
    std::optional<QSqrt3> as_constant() const;

    // Sum over all terms with exponent of variable `var` equal to `power`,
    // with that exponent zeroed out. Same environment.
    MultiPoly coefficient_of(std::size_t var, std::uint32_t power) const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& p, const MultiPoly& q);
    friend MultiPoly operator-(const MultiPoly& p, const MultiPoly& q);
    friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
    MultiPoly& operator+=(const MultiPoly& q) { return *this = *this + q; }
    MultiPoly& operator-=(const MultiPoly& q) { return *this = *this - q; }
    MultiPoly& operator*=(const MultiPoly& q) { return *this = *this * q; }

    MultiPoly scaled(const QSqrt3& s) const;
    MultiPoly pow(std::uint32_t n) const;

    friend bool operator==(const MultiPoly& p, const MultiPoly& q) {
        return same_env(p.env_, q.env_) && p.terms_ == q.terms_;
    }
    friend bool operator!=(const MultiPoly& p, const MultiPoly& q) {
        return !(p == q);
    }

    // Exact substitution variable -> polynomial; unbound variables pass
    // through. Every bound name must exist in the environment.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings) const;

    // Substitution of constants for all variables.
    QSqrt3 evaluate(const std::vector<QSqrt3>& values) const;

    // Rebuild the polynomial over another environment, mapping variables
    // by name. Every variable actually used must exist in the target.
    MultiPoly with_env(const EnvPtr& target) const;

    // Text form: terms in descending lexicographic order of exponent
    // vectors, e.g. "5*r1^2 + 5*r2^2 + 5*r3^2". parse() accepts exactly
    // this grammar (plus whitespace and parenthesized coefficients).
    std::string to_string() const;
    static MultiPoly parse(EnvPtr env, const std::string& text);

    // Raw term insertion used by builders; accumulates and drops zeros.
    void add_term(const Monomial& m, const QSqrt3& coeff);

private:
    explicit MultiPoly(EnvPtr env) : env_(std::move(env)) {
        if (!env_) {
            throw EnvError("null environment");
        }
    }
    static void check_same_env(const MultiPoly& p, const MultiPoly& q);

    EnvPtr env_;
    std::map<Monomial, QSqrt3> terms_;
};

inline std::uint32_t monomial_degree(const Monomial& m) {
    std::uint32_t d = 0;
    for (auto e : m) {
        d += e;
    }
    return d;
}

} // namespace so3five

#endif
