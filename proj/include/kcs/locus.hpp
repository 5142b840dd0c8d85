#pragma once

#include "kcs/ideal.hpp"

namespace kcs {

/// Closed subset of the homogeneous spectrum presented as a finite union of
/// vanishing loci V(I).  An empty component list is the empty locus.
struct Locus {
    Ring ring;
    std::vector<Ideal> components;

    static Locus empty(Ring r) { return Locus{std::move(r), {}}; }

    static Locus of(const Ideal& I) { return Locus{I.ring(), {I}}; }

    void requireRing(const Ring& r) const {
        if (!same_ring(ring, r)) throw RingMismatchError("locus belongs to a different ring");
        for (const auto& c : components)
            if (!same_ring(c.ring(), r)) throw RingMismatchError("locus component ring differs");
    }
};

namespace detail {

/// V(I) contained in V(Js[0]) ∪ ... ∪ V(Js[m-1])?  Single targets reduce to
/// radical membership of every generator; longer unions split off the first
/// target one generator at a time, saturating away the locus of that
/// generator before recursing into the remaining components.
inline bool contained_in_union(const Ideal& I, const std::vector<Ideal>& targets,
                               std::size_t from) {
    if (is_unit_ideal(I)) return true; // empty locus
    if (from >= targets.size()) return false;
    const Ideal& J = targets[from];
    if (from + 1 == targets.size()) {
        for (const auto& g : J.generators())
            if (!radical_member(g, I)) return false;
        return true;
    }
    if (J.generators().empty()) return true; // V(0) is everything
    for (const auto& g : J.generators())
        if (!contained_in_union(saturate(I, g), targets, from + 1)) return false;
    return true;
}

} // namespace detail

/// Decide V ⊆ W for unions of vanishing loci.
inline bool locus_contained(const Locus& V, const Locus& W) {
    if (!same_ring(V.ring, W.ring))
        throw RingMismatchError("locus_contained: rings differ");
    for (const auto& I : V.components)
        if (!detail::contained_in_union(I, W.components, 0)) return false;
    return true;
}

inline bool locus_equal(const Locus& V, const Locus& W) {
    return locus_contained(V, W) && locus_contained(W, V);
}

inline bool locus_is_empty(const Locus& V) {
    for (const auto& I : V.components)
        if (!is_unit_ideal(I)) return false;
    return true;
}

} // namespace kcs
