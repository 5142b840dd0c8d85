#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "kcs/polynomial.hpp"

namespace kcs {

/// Process-wide cap on Buchberger reduction steps.  Set once at startup
/// (CLI flag --gb-step-limit); exceeded computations raise
/// ComputationLimitError instead of running away.
inline std::atomic<std::uint64_t>& gb_step_limit() {
    static std::atomic<std::uint64_t> limit{5'000'000};
    return limit;
}

/// A module monomial: basis position plus a ring monomial.
struct MTerm {
    std::uint32_t pos;
    Monomial mono;

    bool operator==(const MTerm& o) const { return pos == o.pos && mono == o.mono; }
};

/// Position-over-term order: lower position dominates, ring order breaks ties.
struct MTermGreater {
    int elimTail = 0;
    bool operator()(const MTerm& a, const MTerm& b) const {
        if (a.pos != b.pos) return a.pos < b.pos;
        return mono_compare(a.mono, b.mono, elimTail) > 0;
    }
};

/// Element of a finite free module A^rank with exact coefficients, stored in
/// canonical order (leading module term first).
class VecPoly {
public:
    using TermMap = std::map<MTerm, Rational, MTermGreater>;

    VecPoly(Ring ring, std::uint32_t rank)
        : ring_(std::move(ring)), rank_(rank), terms_(MTermGreater{ring_->elimTail}) {}

    static VecPoly unitVector(const Ring& ring, std::uint32_t rank, std::uint32_t pos) {
        VecPoly v(ring, rank);
        v.addTerm({pos, Monomial(ring->variableCount(), 0)}, 1);
        return v;
    }

    /// Column vector with the given polynomial components.
    static VecPoly fromComponents(const Ring& ring, const std::vector<Polynomial>& comps) {
        VecPoly v(ring, static_cast<std::uint32_t>(comps.size()));
        for (std::uint32_t p = 0; p < comps.size(); ++p)
            for (const auto& [m, c] : comps[p].terms())
                v.addTerm({p, m}, c);
        return v;
    }

    const Ring& ring() const { return ring_; }
    std::uint32_t rank() const { return rank_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    const MTerm& leadingTerm() const { return terms_.begin()->first; }
    const Rational& leadingCoefficient() const { return terms_.begin()->second; }

    Polynomial component(std::uint32_t pos) const {
        Polynomial p(ring_);
        for (const auto& [t, c] : terms_)
            if (t.pos == pos) p.addTerm(t.mono, c);
        return p;
    }

    std::vector<Polynomial> components() const {
        std::vector<Polynomial> out(rank_, Polynomial(ring_));
        for (const auto& [t, c] : terms_) out[t.pos].addTerm(t.mono, c);
        return out;
    }

    void addTerm(const MTerm& t, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(t);
        if (it == terms_.end()) {
            terms_.emplace(t, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    VecPoly& operator+=(const VecPoly& o) {
        for (const auto& [t, c] : o.terms_) addTerm(t, c);
        return *this;
    }
    VecPoly& operator-=(const VecPoly& o) {
        for (const auto& [t, c] : o.terms_) addTerm(t, -c);
        return *this;
    }

    /// this * (c * m), the module analog of Polynomial::timesTerm.
    VecPoly timesTerm(const Monomial& m, const Rational& c) const {
        VecPoly r(ring_, rank_);
        if (c == 0) return r;
        for (const auto& [t, cc] : terms_)
            r.terms_.emplace(MTerm{t.pos, mono_mul(t.mono, m)}, cc * c);
        return r;
    }

    VecPoly scaled(const Rational& c) const {
        return timesTerm(Monomial(ring_->variableCount(), 0), c);
    }

    /// Multiply by a polynomial coefficient.
    VecPoly timesPoly(const Polynomial& p) const {
        VecPoly r(ring_, rank_);
        for (const auto& [m, c] : p.terms()) r += timesTerm(m, c);
        return r;
    }

    bool operator==(const VecPoly& o) const {
        if (rank_ != o.rank_ || terms_.size() != o.terms_.size()) return false;
        auto it = terms_.begin();
        auto jt = o.terms_.begin();
        for (; it != terms_.end(); ++it, ++jt)
            if (!(it->first == jt->first) || it->second != jt->second) return false;
        return true;
    }
    bool operator!=(const VecPoly& o) const { return !(*this == o); }

    /// True when every component is zero or homogeneous of degree
    /// `degree - positionDegrees[pos]`.
    bool isHomogeneousVector(const std::vector<int>& positionDegrees, long degree) const {
        for (const auto& [t, c] : terms_)
            if (ring_->monomialDegree(t.mono) + positionDegrees[t.pos] != degree) return false;
        return true;
    }

private:
    Ring ring_;
    std::uint32_t rank_;
    TermMap terms_;
};

// ---------------------------------------------------------------------------
// Buchberger engine (rank 1 recovers the ideal case)
// ---------------------------------------------------------------------------

/// Full normal form of v against `basis` (elements assumed monic).  Every
/// term of the remainder is irreducible, so the result is the canonical
/// coset representative.
inline VecPoly normal_form(VecPoly v, const std::vector<VecPoly>& basis) {
    VecPoly result(v.ring(), v.rank());
    while (!v.isZero()) {
        const MTerm lead = v.leadingTerm();
        const Rational c = v.leadingCoefficient();
        bool reduced = false;
        for (const auto& g : basis) {
            const MTerm& gl = g.leadingTerm();
            if (gl.pos == lead.pos && divides(gl.mono, lead.mono)) {
                v -= g.timesTerm(mono_div(lead.mono, gl.mono), c);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            result.addTerm(lead, c);
            v.addTerm(lead, -c);
        }
    }
    return result;
}

/// Reduced Groebner basis of the submodule generated by `gens` under the
/// position-over-term / degrevlex order.  Elements come back monic,
/// interreduced, and sorted by decreasing leading term, so the basis is the
/// canonical one for the submodule.
inline std::vector<VecPoly> module_groebner(const Ring& ring, std::uint32_t rank,
                                            const std::vector<VecPoly>& gens) {
    std::vector<VecPoly> basis;
    for (const auto& g : gens) {
        if (g.isZero()) continue;
        basis.push_back(g.scaled(Rational(1) / g.leadingCoefficient()));
    }

    // pending S-pairs keyed by (lcm total degree, i, j) for a deterministic,
    // roughly degree-ascending strategy
    std::set<std::tuple<std::uint32_t, std::size_t, std::size_t>> pairs;
    auto pushPairs = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            if (basis[i].leadingTerm().pos != basis[k].leadingTerm().pos) continue;
            Monomial lcm = mono_lcm(basis[i].leadingTerm().mono, basis[k].leadingTerm().mono);
            pairs.emplace(total_degree(lcm), i, k);
        }
    };
    for (std::size_t k = 0; k < basis.size(); ++k) pushPairs(k);

    const std::uint64_t limit = gb_step_limit().load();
    std::uint64_t steps = 0;

    while (!pairs.empty()) {
        auto [deg, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        if (++steps > limit)
            throw ComputationLimitError("Groebner step limit exceeded (" +
                                        std::to_string(limit) + ")");

        const MTerm& li = basis[i].leadingTerm();
        const MTerm& lj = basis[j].leadingTerm();
        // product criterion is only valid for polynomial ideals
        if (rank == 1 && mono_coprime(li.mono, lj.mono)) continue;

        Monomial lcm = mono_lcm(li.mono, lj.mono);
        VecPoly s = basis[i].timesTerm(mono_div(lcm, li.mono), 1);
        s -= basis[j].timesTerm(mono_div(lcm, lj.mono), 1);
        s = normal_form(std::move(s), basis);
        if (s.isZero()) continue;
        basis.push_back(s.scaled(Rational(1) / s.leadingCoefficient()));
        pushPairs(basis.size() - 1);
    }

    // interreduce: drop elements whose leading term another element divides
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!keep[i]) continue;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[j]) continue;
            const MTerm& li = basis[i].leadingTerm();
            const MTerm& lj = basis[j].leadingTerm();
            if (lj.pos == li.pos && divides(lj.mono, li.mono) &&
                !(li.mono == lj.mono && j > i)) {
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<VecPoly> kept;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) kept.push_back(basis[i]);

    // tail-reduce each element against the others
    std::vector<VecPoly> reduced;
    MTermGreater gt{ring->elimTail};
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<VecPoly> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        VecPoly r = normal_form(kept[i], others);
        if (!r.isZero()) reduced.push_back(r.scaled(Rational(1) / r.leadingCoefficient()));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const VecPoly& a, const VecPoly& b) { return gt(a.leadingTerm(), b.leadingTerm()); });
    return reduced;
}

namespace detail {

/// Columns augmented with coefficient-tracking unit vectors: element j is
/// (cols[j], e_j) inside A^{rank + #cols}.  Every member (g, h) of the
/// spanned module satisfies g = sum_j h_j * cols[j].
inline std::vector<VecPoly> augment_columns(const Ring& ring, std::uint32_t rank,
                                            const std::vector<VecPoly>& cols) {
    std::vector<VecPoly> aug;
    const auto total = static_cast<std::uint32_t>(rank + cols.size());
    for (std::uint32_t j = 0; j < cols.size(); ++j) {
        VecPoly v(ring, total);
        for (const auto& [t, c] : cols[j].terms()) v.addTerm(t, c);
        v.addTerm({rank + j, Monomial(ring->variableCount(), 0)}, 1);
        aug.push_back(std::move(v));
    }
    return aug;
}

inline bool main_part_zero(const VecPoly& v, std::uint32_t rank) {
    for (const auto& [t, c] : v.terms())
        if (t.pos < rank) return false;
    return true;
}

} // namespace detail

/// Generators of the syzygy module {x in A^s : sum x_j cols[j] = 0} computed
/// by eliminating the leading block of the augmented module.
inline std::vector<VecPoly> column_syzygies(const Ring& ring, std::uint32_t rank,
                                            const std::vector<VecPoly>& cols) {
    auto gb = module_groebner(ring, static_cast<std::uint32_t>(rank + cols.size()),
                              detail::augment_columns(ring, rank, cols));
    std::vector<VecPoly> out;
    for (const auto& g : gb) {
        if (!detail::main_part_zero(g, rank)) continue;
        VecPoly s(ring, static_cast<std::uint32_t>(cols.size()));
        for (const auto& [t, c] : g.terms()) s.addTerm({t.pos - rank, t.mono}, c);
        out.push_back(std::move(s));
    }
    return out;
}

/// Membership-with-witness solver for the column span of a fixed set of
/// vectors.  The augmented Groebner basis is computed once and reused.
class SpanSolver {
public:
    SpanSolver(Ring ring, std::uint32_t rank, std::vector<VecPoly> cols)
        : ring_(std::move(ring)), rank_(rank), columnCount_(static_cast<std::uint32_t>(cols.size())) {
        gb_ = module_groebner(ring_, rank_ + columnCount_,
                              detail::augment_columns(ring_, rank_, cols));
    }

    /// Coefficients x with target = sum x_j cols[j], or nullopt.
    std::optional<std::vector<Polynomial>> express(const VecPoly& target) const {
        VecPoly probe(ring_, rank_ + columnCount_);
        for (const auto& [t, c] : target.terms()) probe.addTerm(t, c);
        VecPoly rem = normal_form(std::move(probe), gb_);
        if (!detail::main_part_zero(rem, rank_)) return std::nullopt;
        std::vector<Polynomial> x(columnCount_, Polynomial(ring_));
        for (const auto& [t, c] : rem.terms()) x[t.pos - rank_].addTerm(t.mono, -c);
        return x;
    }

    bool contains(const VecPoly& target) const { return express(target).has_value(); }

private:
    Ring ring_;
    std::uint32_t rank_;
    std::uint32_t columnCount_;
    std::vector<VecPoly> gb_;
};

} // namespace kcs
