#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "kcs/rational.hpp"
#include "kcs/ring.hpp"

namespace kcs {

/// Exact multivariate polynomial in canonical form: a term map ordered by the
/// ring's monomial order (leading term first), no zero coefficients.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonoGreater>;

    explicit Polynomial(Ring ring) : ring_(std::move(ring)), terms_(ring_->order()) {}

    static Polynomial zero(const Ring& ring) { return Polynomial(ring); }

    static Polynomial constant(const Ring& ring, const Rational& c) {
        Polynomial p(ring);
        if (c != 0) p.terms_.emplace(Monomial(ring->variableCount(), 0), c);
        return p;
    }

    static Polynomial one(const Ring& ring) { return constant(ring, 1); }

    static Polynomial variable(const Ring& ring, int index, std::uint32_t power = 1) {
        Monomial m(ring->variableCount(), 0);
        m[static_cast<std::size_t>(index)] = power;
        return term(ring, m, 1);
    }

    static Polynomial term(const Ring& ring, const Monomial& m, const Rational& c) {
        Polynomial p(ring);
        if (c != 0) p.terms_.emplace(m, c);
        return p;
    }

    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    std::size_t termCount() const { return terms_.size(); }

    const Monomial& leadingMonomial() const { return terms_.begin()->first; }
    const Rational& leadingCoefficient() const { return terms_.begin()->second; }

    bool isConstant() const {
        return terms_.empty() || (terms_.size() == 1 && is_one(leadingMonomial()));
    }

    Rational constantValue() const {
        if (terms_.empty()) return Rational(0);
        return terms_.begin()->second;
    }

    /// Homological degree when homogeneous; nullopt for inhomogeneous values.
    /// The zero polynomial is homogeneous of every degree and reports 0.
    std::optional<long> homogeneousDegree() const {
        if (terms_.empty()) return 0;
        long d = ring_->monomialDegree(terms_.begin()->first);
        for (const auto& [m, c] : terms_)
            if (ring_->monomialDegree(m) != d) return std::nullopt;
        return d;
    }

    bool isHomogeneous() const { return homogeneousDegree().has_value(); }

    bool isHomogeneousOfDegree(long d) const {
        if (terms_.empty()) return true;
        auto deg = homogeneousDegree();
        return deg && *deg == d;
    }

    /// Component of the given homological degree.
    Polynomial homogeneousComponent(long d) const {
        Polynomial r(ring_);
        for (const auto& [m, c] : terms_)
            if (ring_->monomialDegree(m) == d) r.terms_.emplace(m, c);
        return r;
    }

    std::uint32_t totalDegree() const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
        return d;
    }

    void addTerm(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        requireSameRing(o);
        for (const auto& [m, c] : o.terms_) addTerm(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        requireSameRing(o);
        for (const auto& [m, c] : o.terms_) addTerm(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.requireSameRing(b);
        Polynomial r(a.ring_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.addTerm(mono_mul(ma, mb), ca * cb);
        return r;
    }

    friend Polynomial operator*(const Rational& c, Polynomial p) {
        if (c == 0) return Polynomial(p.ring_);
        for (auto& [m, coeff] : p.terms_) coeff *= c;
        return p;
    }

    /// Multiply by a single term c * m.
    Polynomial timesTerm(const Monomial& m, const Rational& c) const {
        Polynomial r(ring_);
        if (c == 0) return r;
        for (const auto& [mm, cc] : terms_)
            r.terms_.emplace(mono_mul(mm, m), cc * c);
        return r;
    }

    Polynomial pow(unsigned e) const {
        Polynomial r = one(ring_);
        for (unsigned i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    /// Formal partial derivative with respect to variable `index`.
    Polynomial derivative(int index) const {
        Polynomial r(ring_);
        auto idx = static_cast<std::size_t>(index);
        for (const auto& [m, c] : terms_) {
            if (m[idx] == 0) continue;
            Monomial n = m;
            n[idx] -= 1;
            r.addTerm(n, c * m[idx]);
        }
        return r;
    }

    bool operator==(const Polynomial& o) const {
        if (!same_ring(ring_, o.ring_)) return false;
        if (terms_.size() != o.terms_.size()) return false;
        auto it = terms_.begin();
        auto jt = o.terms_.begin();
        for (; it != terms_.end(); ++it, ++jt)
            if (it->first != jt->first || it->second != jt->second) return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    void requireSameRing(const Polynomial& o) const {
        if (!same_ring(ring_, o.ring_))
            throw RingMismatchError("polynomials belong to different rings");
    }

    std::string str() const;

private:
    Ring ring_;
    TermMap terms_;
};

/// Transport a polynomial into another ring that contains all its variables
/// (matched by name, degrees must agree).
inline Polynomial embed(const Polynomial& p, const Ring& target) {
    if (same_ring(p.ring(), target)) {
        Polynomial copy = Polynomial::zero(target);
        for (const auto& [m, c] : p.terms()) copy.addTerm(m, c);
        return copy;
    }
    const Ring& src = p.ring();
    std::vector<int> map(src->variableCount());
    for (std::size_t i = 0; i < src->variableCount(); ++i) {
        int j = target->variableIndex(src->names[i]);
        if (j >= 0 && target->degrees[static_cast<std::size_t>(j)] != src->degrees[i])
            throw RingMismatchError("variable '" + src->names[i] + "' changes degree");
        map[i] = j; // -1 is fine as long as the variable is unused
    }
    Polynomial r = Polynomial::zero(target);
    for (const auto& [m, c] : p.terms()) {
        Monomial n(target->variableCount(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (map[i] < 0)
                throw RingMismatchError("target ring lacks variable '" + src->names[i] + "'");
            n[static_cast<std::size_t>(map[i])] = m[i];
        }
        r.addTerm(n, c);
    }
    return r;
}

/// Restrict to a smaller ring; every monomial must only use surviving
/// variables (used to read off elimination results).
inline Polynomial restrict_to(const Polynomial& p, const Ring& target) {
    return embed(p, target);
}

// ---------------------------------------------------------------------------
// canonical text form
// ---------------------------------------------------------------------------

inline std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string monoText;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!monoText.empty()) monoText += "*";
            monoText += ring_->names[i];
            if (m[i] > 1) monoText += "^" + std::to_string(m[i]);
        }
        if (monoText.empty()) {
            out << rational_str(a);
        } else if (a == 1) {
            out << monoText;
        } else {
            out << rational_str(a) << "*" << monoText;
        }
    }
    return out.str();
}

namespace detail {

struct PolyLexer {
    const std::string& text;
    std::size_t pos = 0;

    void skipSpace() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() { skipSpace(); return pos >= text.size(); }
    char peek() { skipSpace(); return pos < text.size() ? text[pos] : '\0'; }
    char take() { skipSpace(); return text[pos++]; }

    std::string takeIdent() {
        skipSpace();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }

    std::string takeNumber() {
        skipSpace();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return text.substr(start, pos - start);
    }
};

} // namespace detail

/// Parse the canonical text form: terms joined by +/-, each a rational
/// coefficient and/or '*'-separated variable powers, e.g. "1/2*x^2*chi1 - x".
inline Polynomial parse_polynomial(const Ring& ring, const std::string& text) {
    detail::PolyLexer lex{text};
    Polynomial result = Polynomial::zero(ring);
    bool expectTerm = true;
    Rational sign = 1;
    if (lex.done()) throw ValidationError("empty polynomial text");
    while (!lex.done()) {
        char c = lex.peek();
        if (expectTerm) {
            if (c == '+') { lex.take(); continue; }
            if (c == '-') { lex.take(); sign = -sign; continue; }
            // one term: [coeff] ['*' var['^'e]]*
            Rational coeff = 1;
            Monomial mono(ring->variableCount(), 0);
            bool sawFactor = false;
            bool expectFactor = true;
            while (true) {
                char f = lex.peek();
                if (expectFactor && std::isdigit(static_cast<unsigned char>(f))) {
                    std::string num = lex.takeNumber();
                    if (lex.peek() == '/') {
                        lex.take();
                        std::string den = lex.takeNumber();
                        if (den.empty()) throw ValidationError("malformed rational in '" + text + "'");
                        coeff *= parse_rational(num + "/" + den);
                    } else {
                        coeff *= parse_rational(num);
                    }
                    sawFactor = true;
                } else if (expectFactor &&
                           (std::isalpha(static_cast<unsigned char>(f)) || f == '_')) {
                    std::string name = lex.takeIdent();
                    int idx = ring->variableIndex(name);
                    if (idx < 0)
                        throw ValidationError("unknown variable '" + name + "'");
                    std::uint32_t e = 1;
                    if (lex.peek() == '^') {
                        lex.take();
                        std::string es = lex.takeNumber();
                        if (es.empty()) throw ValidationError("missing exponent in '" + text + "'");
                        e = static_cast<std::uint32_t>(std::stoul(es));
                    }
                    mono[static_cast<std::size_t>(idx)] += e;
                    sawFactor = true;
                } else if (!expectFactor && f == '*') {
                    lex.take();
                    expectFactor = true;
                    continue;
                } else {
                    break;
                }
                expectFactor = false;
            }
            if (!sawFactor)
                throw ValidationError("expected a term in '" + text + "'");
            result.addTerm(mono, sign * coeff);
            sign = 1;
            expectTerm = false;
        } else {
            if (c == '+') { lex.take(); expectTerm = true; }
            else if (c == '-') { lex.take(); sign = -1; expectTerm = true; }
            else throw ValidationError("unexpected character '" + std::string(1, c) +
                                       "' in '" + text + "'");
        }
    }
    if (expectTerm) throw ValidationError("dangling sign in '" + text + "'");
    return result;
}

} // namespace kcs
