#pragma once

#include <memory>
#include <mutex>

#include "kcs/groebner.hpp"

namespace kcs {

namespace detail {

inline std::vector<VecPoly> to_rank1(const Ring& ring, const std::vector<Polynomial>& ps) {
    std::vector<VecPoly> out;
    for (const auto& p : ps) out.push_back(VecPoly::fromComponents(ring, {p}));
    return out;
}

inline std::vector<Polynomial> from_rank1(const std::vector<VecPoly>& vs) {
    std::vector<Polynomial> out;
    for (const auto& v : vs) out.push_back(v.component(0));
    return out;
}

/// Reduced Groebner basis of an ideal given by raw generators; no
/// homogeneity requirements (internal paths add inhomogeneous helpers).
inline std::vector<Polynomial> reduced_groebner_raw(const Ring& ring,
                                                    const std::vector<Polynomial>& gens) {
    return from_rank1(module_groebner(ring, 1, to_rank1(ring, gens)));
}

} // namespace detail

/// Homogeneous ideal of a graded polynomial ring.  Immutable value with a
/// write-once lazily computed reduced Groebner basis; copies share the cache.
class Ideal {
public:
    Ideal(Ring ring, std::vector<Polynomial> generators)
        : ring_(std::move(ring)), mutex_(std::make_shared<std::mutex>()),
          cache_(std::make_shared<CacheSlot>()) {
        for (auto& g : generators) {
            if (g.isZero()) continue;
            if (!same_ring(g.ring(), ring_))
                throw RingMismatchError("ideal generator from a different ring");
            if (!g.isHomogeneous())
                throw ValidationError("inhomogeneous ideal generator: " + g.str());
            gens_.push_back(std::move(g));
        }
    }

    static Ideal zero(const Ring& ring) { return Ideal(ring, {}); }

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    /// Reduced Groebner basis (computed on first use, then shared).
    const std::vector<Polynomial>& groebner() const {
        std::lock_guard<std::mutex> lock(*mutex_);
        if (!cache_->basis)
            cache_->basis = std::make_shared<const std::vector<Polynomial>>(
                detail::reduced_groebner_raw(ring_, gens_));
        return *cache_->basis;
    }

    bool hasCachedBasis() const {
        std::lock_guard<std::mutex> lock(*mutex_);
        return cache_->basis != nullptr;
    }

    /// Two-sided normal-form check that a cached basis generates the same
    /// ideal as the stated generators.
    bool verifyCache() const;

    bool operator==(const Ideal& o) const {
        if (!same_ring(ring_, o.ring_)) return false;
        return groebner() == o.groebner();
    }

private:
    struct CacheSlot {
        std::shared_ptr<const std::vector<Polynomial>> basis;
    };

    Ring ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<std::mutex> mutex_;
    std::shared_ptr<CacheSlot> cache_;
};

/// Canonical remainder of p modulo I; zero exactly for members.
inline Polynomial normal_form(const Polynomial& p, const Ideal& I) {
    if (!same_ring(p.ring(), I.ring()))
        throw RingMismatchError("normal_form: polynomial and ideal rings differ");
    auto nf = normal_form(VecPoly::fromComponents(p.ring(), {p}),
                          detail::to_rank1(I.ring(), I.groebner()));
    return nf.component(0);
}

/// The ideal with its reduced Groebner basis computed and cached.  Only the
/// degrevlex order is supported.
inline Ideal groebner_basis(const Ideal& I, const std::string& orderName = "degrevlex") {
    if (orderName != "degrevlex")
        throw UnsupportedError("unknown monomial order '" + orderName + "'");
    Ideal J = I;
    J.groebner();
    return J;
}

inline bool Ideal::verifyCache() const {
    if (!hasCachedBasis()) return true;
    const auto& basis = groebner();
    Ideal fromBasis(ring_, basis);
    for (const auto& g : gens_)
        if (!normal_form(g, fromBasis).isZero()) return false;
    Ideal fromGens(ring_, gens_);
    for (const auto& b : basis)
        if (!normal_form(b, fromGens).isZero()) return false;
    return true;
}

inline bool is_unit_ideal(const Ideal& I) {
    const auto& gb = I.groebner();
    return gb.size() == 1 && gb.front().isConstant() && !gb.front().isZero();
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ring(), b.ring()))
        throw RingMismatchError("ideal_sum: rings differ");
    std::vector<Polynomial> gens = a.generators();
    for (const auto& g : b.generators()) gens.push_back(g);
    return Ideal(a.ring(), gens);
}

/// Radical membership via the Rabinowitsch trick: p lies in the radical of I
/// exactly when 1 belongs to I + (1 - t*p) in one extra variable.
inline bool radical_member(const Polynomial& p, const Ideal& I) {
    if (!same_ring(p.ring(), I.ring()))
        throw RingMismatchError("radical_member: rings differ");
    if (p.isZero()) return true;
    Ring ext = detail::with_elim_variable(I.ring());
    const int t = ext->variableIndex("~t");
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(embed(g, ext));
    gens.push_back(Polynomial::one(ext) - Polynomial::variable(ext, t) * embed(p, ext));
    auto gb = detail::reduced_groebner_raw(ext, gens);
    return gb.size() == 1 && gb.front().isConstant() && !gb.front().isZero();
}

/// Saturation I : g^infinity, computed by eliminating t from I + (1 - t*g).
inline Ideal saturate(const Ideal& I, const Polynomial& g) {
    if (!same_ring(g.ring(), I.ring()))
        throw RingMismatchError("saturate: rings differ");
    if (g.isZero())
        return Ideal(I.ring(), {Polynomial::one(I.ring())});
    Ring ext = detail::with_elim_variable(I.ring());
    const int t = ext->variableIndex("~t");
    const auto tIdx = static_cast<std::size_t>(t);
    std::vector<Polynomial> gens;
    for (const auto& h : I.generators()) gens.push_back(embed(h, ext));
    gens.push_back(Polynomial::one(ext) - Polynomial::variable(ext, t) * embed(g, ext));
    auto gb = detail::reduced_groebner_raw(ext, gens);

    std::vector<Polynomial> result;
    for (const auto& b : gb) {
        bool usesT = false;
        for (const auto& [m, c] : b.terms())
            if (m[tIdx] != 0) { usesT = true; break; }
        if (usesT) continue;
        Polynomial back = restrict_to(b, I.ring());
        // the saturation of a homogeneous ideal by a homogeneous element is
        // homogeneous, so splitting components stays inside the ideal
        std::set<long> degs;
        for (const auto& [m, c] : back.terms()) degs.insert(I.ring()->monomialDegree(m));
        for (long d : degs) result.push_back(back.homogeneousComponent(d));
    }
    return Ideal(I.ring(), result);
}

} // namespace kcs
