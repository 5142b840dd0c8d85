#pragma once

#include "kcs/groebner.hpp"

namespace kcs {

/// Rational function q(t) / (1 - t^2)^denomPower with a Laurent-polynomial
/// numerator, the shape of every Hilbert series over a ring whose variables
/// all sit in degree -2.
struct HilbertSeries {
    std::map<int, Integer> numerator; // t-exponent -> coefficient
    int denomPower = 0;

    bool numeratorIsZero() const { return numerator.empty(); }

    void addNumerator(int exponent, const Integer& c) {
        if (c == 0) return;
        auto it = numerator.find(exponent);
        if (it == numerator.end()) {
            numerator.emplace(exponent, c);
        } else {
            it->second += c;
            if (it->second == 0) numerator.erase(it);
        }
    }

    /// Cancel common (1 - t^2) factors so equal series compare equal.
    HilbertSeries normalized() const {
        HilbertSeries h = *this;
        while (h.denomPower > 0 && !h.numerator.empty()) {
            // try dividing the numerator by (1 - t^2), low exponents first
            const int maxExp = h.numerator.rbegin()->first;
            std::map<int, Integer> q;
            std::map<int, Integer> rem = h.numerator;
            bool ok = true;
            while (!rem.empty()) {
                auto it = rem.begin();
                int e = it->first;
                Integer c = it->second;
                if (e + 2 > maxExp) { ok = false; break; }
                q[e] = c;
                rem.erase(it);
                // cancel c * t^e * (1 - t^2)
                auto jt = rem.find(e + 2);
                if (jt == rem.end()) {
                    rem.emplace(e + 2, c);
                } else {
                    jt->second += c;
                    if (jt->second == 0) rem.erase(jt);
                }
            }
            if (!ok) break;
            h.numerator = std::move(q);
            --h.denomPower;
        }
        return h;
    }

    bool operator==(const HilbertSeries& o) const {
        HilbertSeries a = normalized(), b = o.normalized();
        return a.denomPower == b.denomPower && a.numerator == b.numerator;
    }

    std::string str() const {
        if (numerator.empty()) return "0";
        std::string num;
        {
            bool first = true;
            for (auto it = numerator.rbegin(); it != numerator.rend(); ++it) {
                Integer c = it->second;
                if (first) {
                    if (c < 0) { num += "-"; c = -c; }
                } else {
                    num += c < 0 ? " - " : " + ";
                    if (c < 0) c = -c;
                }
                first = false;
                if (it->first == 0) {
                    num += c.str();
                } else {
                    if (c != 1) num += c.str() + "*";
                    num += "t^" + std::to_string(it->first);
                }
            }
        }
        if (denomPower == 0) return num;
        std::string den = "(1 - t^2)";
        if (denomPower > 1) den += "^" + std::to_string(denomPower);
        return "(" + num + ")/" + den;
    }
};

/// Coefficient of t^m in the power-series expansion, i.e. the vector-space
/// dimension of the graded piece in homological degree -m.
inline Integer series_coefficient(const HilbertSeries& h, int m) {
    Integer total = 0;
    for (const auto& [e, c] : h.numerator) {
        int diff = m - e;
        if (diff < 0 || diff % 2 != 0) continue;
        int k = diff / 2;
        // binomial(k + n - 1, n - 1)
        Integer binom = 1;
        for (int i = 1; i < h.denomPower; ++i) {
            binom *= (k + i);
            binom /= i;
        }
        if (h.denomPower == 0) binom = (k == 0) ? 1 : 0;
        total += c * binom;
    }
    return total;
}

/// Order of the pole at t = 1 (0 when the series is a Laurent polynomial,
/// i.e. the graded pieces vanish eventually).
inline int pole_order_at_one(const HilbertSeries& h) {
    if (h.numerator.empty()) return 0;
    // multiplicity of the root t = 1 in the numerator (Laurent shift is a
    // unit at t = 1, so it can be ignored)
    int lowest = h.numerator.begin()->first;
    int highest = h.numerator.rbegin()->first;
    std::vector<Integer> dense(static_cast<std::size_t>(highest - lowest + 1), Integer(0));
    for (const auto& [e, c] : h.numerator) dense[static_cast<std::size_t>(e - lowest)] = c;
    int mult = 0;
    while (mult < h.denomPower) {
        Integer at1 = 0;
        for (const auto& c : dense) at1 += c;
        if (at1 != 0) break;
        // synthetic division by (t - 1): q_i with p = (t - 1) q
        std::vector<Integer> q(dense.size() - 1, Integer(0));
        Integer carry = 0;
        for (std::size_t i = dense.size(); i-- > 1;) {
            carry += dense[i];
            q[i - 1] = carry;
        }
        dense = std::move(q);
        ++mult;
        if (dense.empty()) break;
    }
    int pole = h.denomPower - mult;
    return pole > 0 ? pole : 0;
}

/// Subquotient of a graded free module presented by generating cycles and a
/// boundary span inside A^degrees.size().
struct SubquotientPresentation {
    Ring ring;
    std::vector<int> degrees;
    std::vector<VecPoly> numeratorGens;
    std::vector<VecPoly> denominatorGens;
};

namespace detail {

/// Numerator of the Hilbert series of A/I for a monomial ideal, as a
/// polynomial in s (one variable of exponent-degree 1).
inline std::map<int, Integer> monomial_quotient_numerator(std::vector<Monomial> gens) {
    // minimalize
    std::vector<Monomial> min;
    for (const auto& g : gens) {
        bool dominated = false;
        for (const auto& h : gens)
            if (&g != &h && divides(h, g) && !(g == h)) { dominated = true; break; }
        if (!dominated && std::find(min.begin(), min.end(), g) == min.end()) min.push_back(g);
    }
    if (min.empty()) return {{0, Integer(1)}};
    for (const auto& g : min)
        if (is_one(g)) return {};
    // split off the last generator m:  N(I' + m) = N(I') - s^{deg m} N(I' : m)
    Monomial m = min.back();
    std::vector<Monomial> rest(min.begin(), min.end() - 1);
    auto n1 = monomial_quotient_numerator(rest);
    std::vector<Monomial> colon;
    colon.reserve(rest.size());
    for (const auto& g : rest) colon.push_back(mono_colon(g, m));
    auto n2 = monomial_quotient_numerator(colon);
    const int d = static_cast<int>(total_degree(m));
    for (const auto& [e, c] : n2) {
        auto it = n1.find(e + d);
        if (it == n1.end()) {
            n1.emplace(e + d, -c);
        } else {
            it->second -= c;
            if (it->second == 0) n1.erase(it);
        }
    }
    return n1;
}

/// Series of a submodule of A^degrees.size() via its leading-term module.
inline HilbertSeries submodule_series(const Ring& ring, const std::vector<int>& degrees,
                                      const std::vector<VecPoly>& gens) {
    const int n = static_cast<int>(ring->variableCount());
    auto gb = module_groebner(ring, static_cast<std::uint32_t>(degrees.size()), gens);
    std::vector<std::vector<Monomial>> leadByPos(degrees.size());
    for (const auto& g : gb) leadByPos[g.leadingTerm().pos].push_back(g.leadingTerm().mono);

    HilbertSeries h;
    h.denomPower = n;
    for (std::size_t p = 0; p < degrees.size(); ++p) {
        if (leadByPos[p].empty()) continue; // no elements in this component
        // series of the ideal: (1 - N(A/I)) / (1 - t^2)^n, shifted by t^{-d_p}
        auto npoly = monomial_quotient_numerator(leadByPos[p]);
        h.addNumerator(-degrees[p], 1);
        for (const auto& [e, c] : npoly) h.addNumerator(2 * e - degrees[p], -c);
    }
    return h;
}

} // namespace detail

/// Hilbert series of a subquotient presentation.  Requires a base ring with
/// no degree-0 variables, so every graded piece is finite dimensional.
inline HilbertSeries hilbert_series(const SubquotientPresentation& pres) {
    for (int d : pres.ring->degrees)
        if (d == 0)
            throw UnsupportedError("hilbert_series: ring has a degree-0 variable");
    HilbertSeries num = detail::submodule_series(pres.ring, pres.degrees, pres.numeratorGens);
    HilbertSeries den = detail::submodule_series(pres.ring, pres.degrees, pres.denominatorGens);
    HilbertSeries out;
    out.denomPower = num.denomPower;
    out.numerator = num.numerator;
    for (const auto& [e, c] : den.numerator) out.addNumerator(e, -c);
    return out;
}

} // namespace kcs
