#include "so3five/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace so3five {

namespace {

Monomial zero_monomial(const EnvPtr& env) {
    return Monomial(env->size(), 0);
}

} // namespace

MultiPoly MultiPoly::constant(EnvPtr env, const QSqrt3& value) {
    MultiPoly p(std::move(env));
    if (!value.is_zero()) {
        p.terms_.emplace(zero_monomial(p.env_), value);
    }
    return p;
}

MultiPoly MultiPoly::variable(EnvPtr env, const std::string& name) {
    MultiPoly p(std::move(env));
    Monomial m = zero_monomial(p.env_);
    m[p.env_->index_of(name)] = 1;
    p.terms_.emplace(std::move(m), QSqrt3::one());
    return p;
}

int MultiPoly::total_degree() const {
    int deg = -1;
    for (const auto& [m, c] : terms_) {
        deg = std::max(deg, static_cast<int>(monomial_degree(m)));
    }
    return deg;
}

QSqrt3 MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? QSqrt3::zero() : it->second;
}

std::optional<QSqrt3> MultiPoly::as_constant() const {
    if (terms_.empty()) {
        return QSqrt3::zero();
    }
    if (terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0) {
        return terms_.begin()->second;
    }
    return std::nullopt;
}

MultiPoly MultiPoly::coefficient_of(std::size_t var, std::uint32_t power) const {
    if (var >= env_->size()) {
        throw EnvError("variable index out of range");
    }
    MultiPoly out(env_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == power) {
            Monomial stripped = m;
            stripped[var] = 0;
            out.add_term(stripped, c);
        }
    }
    return out;
}

void MultiPoly::check_same_env(const MultiPoly& p, const MultiPoly& q) {
    if (!same_env(p.env_, q.env_)) {
        throw EnvError("polynomials over different environments");
    }
}

void MultiPoly::add_term(const Monomial& m, const QSqrt3& coeff) {
    if (m.size() != env_->size()) {
        throw EnvError("monomial length does not match environment");
    }
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(env_);
    for (const auto& [m, c] : terms_) {
        out.terms_.emplace(m, -c);
    }
    return out;
}

MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) {
    MultiPoly::check_same_env(p, q);
    MultiPoly out = p;
    for (const auto& [m, c] : q.terms_) {
        out.add_term(m, c);
    }
    return out;
}

MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) {
    MultiPoly::check_same_env(p, q);
    MultiPoly out = p;
    for (const auto& [m, c] : q.terms_) {
        out.add_term(m, -c);
    }
    return out;
}

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
    MultiPoly::check_same_env(p, q);
    const int dp = p.total_degree();
    const int dq = q.total_degree();
    if (dp >= 0 && dq >= 0 &&
        static_cast<std::uint32_t>(dp + dq) > MultiPoly::kMaxTotalDegree) {
        throw ResourceError("product exceeds total degree cap");
    }
    MultiPoly out(p.env_);
    const std::size_t n = p.env_->size();
    Monomial m(n, 0);
    for (const auto& [mp, cp] : p.terms_) {
        for (const auto& [mq, cq] : q.terms_) {
            for (std::size_t i = 0; i < n; ++i) {
                m[i] = mp[i] + mq[i];
            }
            out.add_term(m, cp * cq);
        }
    }
    return out;
}

MultiPoly MultiPoly::scaled(const QSqrt3& s) const {
    MultiPoly out(env_);
    if (s.is_zero()) {
        return out;
    }
    for (const auto& [m, c] : terms_) {
        out.terms_.emplace(m, c * s);
    }
    return out;
}

MultiPoly MultiPoly::pow(std::uint32_t n) const {
    MultiPoly out = constant(env_, QSqrt3::one());
    for (std::uint32_t i = 0; i < n; ++i) {
        out = out * *this;
    }
    return out;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& bindings) const {
    std::vector<const MultiPoly*> bound(env_->size(), nullptr);
    for (const auto& [name, value] : bindings) {
        const auto idx = env_->find(name);
        if (!idx) {
            throw EnvError("substitution for unknown variable '" + name + "'");
        }
        check_same_env(*this, value);
        bound[*idx] = &value;
    }
    MultiPoly out(env_);
    for (const auto& [m, c] : terms_) {
        MultiPoly term = constant(env_, c);
        Monomial passthrough = m;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (bound[i] && m[i] > 0) {
                passthrough[i] = 0;
                term = term * bound[i]->pow(m[i]);
            }
        }
        MultiPoly shell(env_);
        shell.terms_.emplace(passthrough, QSqrt3::one());
        out += term * shell;
    }
    return out;
}

QSqrt3 MultiPoly::evaluate(const std::vector<QSqrt3>& values) const {
    if (values.size() != env_->size()) {
        throw EnvError("evaluation point has wrong arity");
    }
    QSqrt3 acc = QSqrt3::zero();
    for (const auto& [m, c] : terms_) {
        QSqrt3 t = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (std::uint32_t e = 0; e < m[i]; ++e) {
                t *= values[i];
            }
        }
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::with_env(const EnvPtr& target) const {
    if (same_env(env_, target)) {
        return *this;
    }
    std::vector<std::optional<std::size_t>> remap(env_->size());
    for (std::size_t i = 0; i < env_->size(); ++i) {
        remap[i] = target->find(env_->name(i));
    }
    MultiPoly out(target);
    for (const auto& [m, c] : terms_) {
        Monomial t(target->size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) {
                continue;
            }
            if (!remap[i]) {
                throw EnvError("variable '" + env_->name(i) +
                               "' missing from target environment");
            }
            t[*remap[i]] = m[i];
        }
        out.add_term(t, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

std::string monomial_to_string(const VarEnv& env, const Monomial& m) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) {
            continue;
        }
        if (!first) {
            out << "*";
        }
        first = false;
        out << env.name(i);
        if (m[i] > 1) {
            out << "^" << m[i];
        }
    }
    return out.str();
}

// Coefficient in front of a nonconstant monomial. Compound coefficients
// (both field components nonzero) get parentheses so the text stays
// unambiguous under the term grammar.
std::string coefficient_prefix(const QSqrt3& c, bool& negate_join) {
    negate_join = false;
    if (c.is_one()) {
        return "";
    }
    if (c == -QSqrt3::one()) {
        negate_join = true;
        return "";
    }
    if (c.a != 0 && c.b != 0) {
        return "(" + c.to_string() + ")*";
    }
    QSqrt3 mag = c;
    if ((c.a != 0 && c.a < 0) || (c.a == 0 && c.b < 0)) {
        negate_join = true;
        mag = -c;
    }
    return mag.to_string() + "*";
}

} // namespace

std::string MultiPoly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    // std::map iterates ascending; print descending lexicographic.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string body = monomial_to_string(*env_, m);
        std::string piece;
        bool negative = false;
        if (body.empty()) {
            QSqrt3 mag = c;
            if ((c.a != 0 && c.a < 0) || (c.a == 0 && c.b < 0)) {
                if (c.a == 0 || c.b == 0 || (c.a < 0 && c.b < 0)) {
                    negative = true;
                    mag = -c;
                }
            }
            piece = (mag.a != 0 && mag.b != 0) ? "(" + mag.to_string() + ")"
                                               : mag.to_string();
        } else {
            piece = coefficient_prefix(c, negative) + body;
        }
        if (first) {
            out << (negative ? "-" : "") << piece;
            first = false;
        } else {
            out << (negative ? " - " : " + ") << piece;
        }
    }
    return out.str();
}

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    explicit Lexer(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) {
            throw ParseError(std::string("expected '") + c + "' at offset " +
                             std::to_string(pos) + " in polynomial text");
        }
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (start == pos) {
            throw ParseError("expected integer at offset " + std::to_string(pos));
        }
        return Int(text.substr(start, pos - start));
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() &&
            (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            ++pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
                ++pos;
            }
        }
        if (start == pos) {
            throw ParseError("expected identifier at offset " + std::to_string(pos));
        }
        return text.substr(start, pos - start);
    }
};

class PolyParser {
public:
    PolyParser(EnvPtr env, const std::string& text) : env_(std::move(env)), lex_(text) {}

    MultiPoly parse() {
        MultiPoly p = expression();
        if (!lex_.eof()) {
            throw ParseError("trailing input at offset " + std::to_string(lex_.pos));
        }
        return p;
    }

private:
    MultiPoly expression() {
        bool neg = lex_.accept('-');
        if (!neg) {
            lex_.accept('+');
        }
        MultiPoly acc = term();
        if (neg) {
            acc = -acc;
        }
        while (true) {
            if (lex_.accept('+')) {
                acc += term();
            } else if (lex_.accept('-')) {
                acc -= term();
            } else {
                break;
            }
        }
        return acc;
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (lex_.accept('*')) {
            acc *= factor();
        }
        return acc;
    }

    MultiPoly factor() {
        const char c = lex_.peek();
        if (c == '(') {
            lex_.expect('(');
            MultiPoly inner = expression();
            lex_.expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = lex_.integer();
            Rational value(num);
            if (lex_.accept('/')) {
                Int den = lex_.integer();
                value = make_rational(num, den);
            }
            return MultiPoly::constant(env_, QSqrt3(value));
        }
        const std::string name = lex_.ident();
        if (name == "s3") {
            return MultiPoly::constant(env_, QSqrt3::sqrt3());
        }
        MultiPoly var = MultiPoly::variable(env_, name);
        if (lex_.accept('^')) {
            Int e = lex_.integer();
            if (e > MultiPoly::kMaxTotalDegree) {
                throw ResourceError("exponent exceeds total degree cap");
            }
            return var.pow(static_cast<std::uint32_t>(e));
        }
        return var;
    }

    EnvPtr env_;
    Lexer lex_;
};

} // namespace

MultiPoly MultiPoly::parse(EnvPtr env, const std::string& text) {
    return PolyParser(std::move(env), text).parse();
}

} // namespace so3five
