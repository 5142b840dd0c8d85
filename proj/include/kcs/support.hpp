#pragma once

#include "kcs/hilbert.hpp"
#include "kcs/koszul.hpp"
#include "kcs/locus.hpp"

namespace kcs {

/// An annihilator ideal for the homotopy class of the identity, together
/// with the null-homotopies certifying each generator.  V(annihilator) is
/// the support of the subject.
struct SupportCertificate {
    CurvedModule subject;
    Ideal annihilator;
    std::vector<std::pair<Polynomial, CurvedMorphism>> witnesses;

    Locus locus() const { return Locus::of(annihilator); }

    /// Exact re-check of every witness: D*beta + (-1)^{|a|} beta*D == a*Id.
    bool verify() const {
        for (const auto& [gen, beta] : witnesses) {
            PolyMatrix check = mat_mul(subject.differential(), beta.matrix());
            PolyMatrix tail = mat_mul(beta.matrix(), subject.differential());
            if (beta.degree() % 2 == 0) tail = mat_negate(tail);
            check = mat_add(check, tail);
            PolyMatrix want = mat_scale(gen, identity_matrix(subject.ring(), subject.rank()));
            if (!mat_equal(check, want)) return false;
        }
        return true;
    }
};

/// Result of a bounded tensor-nilpotence search.
struct NilpotenceResult {
    std::optional<int> exponent;           // smallest n <= bound, if found
    std::optional<CurvedMorphism> witness; // null homotopy for the n-th power
    int bound = 0;

    bool found() const { return exponent.has_value(); }
};

// ---------------------------------------------------------------------------
// pointwise and global support
// ---------------------------------------------------------------------------

/// Is the fiber of P at the prime p nonzero in the homotopy category?
/// When w avoids p the fiber category vanishes.  Otherwise the fiber is an
/// honest complex over the graded residue field and it is contractible
/// exactly when the rank of the reduced differential accounts for half the
/// generators: rank over the fraction field of A/p equals the rank over the
/// graded fraction field because minors of the graded matrix are homogeneous.
inline bool supp_point(const CurvedModule& p, const Ideal& prime) {
    if (!same_ring(p.ring(), prime.ring()))
        throw RingMismatchError("supp_point: rings differ");
    if (is_unit_ideal(prime)) throw ValidationError("supp_point: unit ideal is not a prime");
    if (!normal_form(p.curvature(), prime).isZero()) return false;
    int r = rank_over_domain(p.differential(), prime);
    return 2 * r != static_cast<int>(p.rank());
}

/// Annihilator of the identity's homotopy class with certifying homotopies.
inline SupportCertificate supp_global(const CurvedModule& p) {
    HomComplex h = hom_complex_full(p, p);
    FreeModuleMap dmap = FreeModuleMap::make(h.module.ring(), h.module.degrees(),
                                             h.module.degrees(), -1, h.module.differential());
    VecPoly idVec = vec_morphism(h, CurvedMorphism::identity(p));
    Ideal ann = module_quotient(dmap, idVec);

    SpanSolver span(h.module.ring(), static_cast<std::uint32_t>(h.module.rank()),
                    dmap.columns());
    std::vector<std::pair<Polynomial, CurvedMorphism>> witnesses;
    for (const auto& a : ann.generators()) {
        CurvedMorphism aId = CurvedMorphism::scalar(a, p);
        auto x = span.express(vec_morphism(h, aId));
        if (!x)
            throw Error("internal error: annihilator generator without a homotopy witness");
        PolyMatrix beta = zero_matrix(p.ring(), p.rank(), p.rank());
        for (std::size_t k = 0; k < p.rank(); ++k)
            for (std::size_t i = 0; i < p.rank(); ++i) {
                long want = p.degrees()[i] + aId.degree() + 1 - p.degrees()[k];
                beta[k][i] = (*x)[h.index(k, i)].homogeneousComponent(want);
            }
        witnesses.emplace_back(a,
                               CurvedMorphism(p, p, aId.degree() + 1, std::move(beta)));
    }
    SupportCertificate cert{p, std::move(ann), std::move(witnesses)};
    if (!cert.verify())
        throw Error("internal error: support certificate failed verification");
    return cert;
}

inline Locus support_locus(const CurvedModule& p) { return supp_global(p).locus(); }

/// Thick-subcategory membership: P' lies in the thick tensor submodule
/// generated by P exactly when its support is contained in that of P.
inline bool thick_member(const CurvedModule& pPrime, const CurvedModule& p) {
    if (!same_ring(pPrime.ring(), p.ring()))
        throw RingMismatchError("thick_member: rings differ");
    if (!(pPrime.curvature() == p.curvature()))
        throw ValidationError("thick_member: curvature mismatch");
    return locus_contained(support_locus(pPrime), support_locus(p));
}

/// Total support of the pair (A, w) over a regular base: the locus where w
/// locally falls into the square of the prime, computed as the vanishing of
/// the Jacobian ideal (w, dw/dv for every variable v).
inline Locus supp_total(const Ring& ring, const Polynomial& w) {
    if (!same_ring(w.ring(), ring)) throw RingMismatchError("supp_total: rings differ");
    if (!w.isZero() && !w.isHomogeneousOfDegree(-2))
        throw ValidationError("supp_total: w must be homogeneous of degree -2");
    std::vector<Polynomial> gens;
    gens.push_back(w);
    for (std::size_t v = 0; v < ring->variableCount(); ++v)
        gens.push_back(w.derivative(static_cast<int>(v)));
    return Locus::of(Ideal(ring, gens));
}

// ---------------------------------------------------------------------------
// witness constructions
// ---------------------------------------------------------------------------

/// Tensor of rank-2 blocks [[0, a_i], [b_i, 0]]; curvature sum a_i b_i.
/// Every prime containing all a_i, b_i supports the result.  Empty lists
/// give the tensor unit.
inline CurvedModule square_witness(const Ring& ring, const std::vector<Polynomial>& as,
                                   const std::vector<Polynomial>& bs) {
    if (as.size() != bs.size())
        throw ValidationError("square_witness: lists must have equal length");
    CurvedModule acc = CurvedModule::unit(ring);
    for (std::size_t i = 0; i < as.size(); ++i) {
        auto da = as[i].homogeneousDegree();
        auto db = bs[i].homogeneousDegree();
        if (!da || !db || *da + *db != -2)
            throw ValidationError("square_witness: degree mismatch, need |a| + |b| = -2 at pair " +
                                  std::to_string(i));
        PolyMatrix d = zero_matrix(ring, 2, 2);
        d[0][1] = as[i];
        d[1][0] = bs[i];
        CurvedModule block = CurvedModule::make(ring, as[i] * bs[i],
                                                {0, static_cast<int>(*da) + 1}, std::move(d));
        acc = tensor(acc, block);
    }
    return acc;
}

/// Koszul cut: tensor with the square-zero blocks on x_list, slicing the
/// support of P with V(x_list).
inline CurvedModule koszul_cut(const std::vector<Polynomial>& xs, const CurvedModule& p) {
    CurvedModule acc = p;
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
        const Polynomial& x = *it;
        if (!same_ring(x.ring(), p.ring()))
            throw RingMismatchError("koszul_cut: element from a different ring");
        auto dx = x.homogeneousDegree();
        if (!dx) throw ValidationError("koszul_cut: elements must be homogeneous");
        PolyMatrix d = zero_matrix(p.ring(), 2, 2);
        d[0][1] = x;
        CurvedModule block = CurvedModule::make(p.ring(), Polynomial::zero(p.ring()),
                                                {0, static_cast<int>(*dx) + 1}, std::move(d));
        acc = tensor(block, acc);
    }
    return acc;
}

/// Matrix factorization d0 d1 = f = d1 d0 over R, realized as a curved
/// module over R[chi1] with differential [[0, chi*d1], [d0, 0]].
inline CurvedModule mf_to_curved(const Ring& base, const Polynomial& f, const PolyMatrix& d0,
                                 const PolyMatrix& d1) {
    for (int d : base->degrees)
        if (d != 0) throw ValidationError("mf_to_curved: base ring must have degree-0 variables");
    if (!same_ring(f.ring(), base)) throw RingMismatchError("mf_to_curved: f from a different ring");
    const std::size_t s = row_count(d0);
    if (s == 0 || col_count(d0) != s || row_count(d1) != s || col_count(d1) != s)
        throw ValidationError("mf_to_curved: d0, d1 must be square of equal size");
    PolyMatrix fid = mat_scale(f, identity_matrix(base, s));
    if (!mat_equal(mat_mul(d0, d1), fid))
        throw ValidationError("mf_to_curved: factorization fails, d0*d1 != f*Id");
    if (!mat_equal(mat_mul(d1, d0), fid))
        throw ValidationError("mf_to_curved: factorization fails, d1*d0 != f*Id");

    Ring A = extend_ring(base, {{"chi1", -2}});
    Polynomial chi = Polynomial::variable(A, A->variableIndex("chi1"));
    std::vector<int> degrees;
    for (std::size_t i = 0; i < s; ++i) degrees.push_back(1); // shifted P0 block
    for (std::size_t i = 0; i < s; ++i) degrees.push_back(0); // P1 block
    PolyMatrix d = zero_matrix(A, 2 * s, 2 * s);
    PolyMatrix d0A = embed_matrix(d0, A), d1A = embed_matrix(d1, A);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            d[i][s + j] = chi * d1A[i][j];
            d[s + i][j] = d0A[i][j];
        }
    return CurvedModule::make(A, embed(f, A) * chi, std::move(degrees), std::move(d));
}

// ---------------------------------------------------------------------------
// tensor nilpotence
// ---------------------------------------------------------------------------

/// Breadth-first search for the smallest n <= nMax with the n-th tensor
/// power of alpha (optionally tensored with id_P) null-homotopic.  The
/// underlying lemmas guarantee existence under their hypotheses but give no
/// bound, so the cap is part of the contract.
inline NilpotenceResult tensor_nilpotence_search(const CurvedMorphism& alpha,
                                                 const CurvedModule* p, int nMax) {
    if (!alpha.isCycle())
        throw ValidationError("tensor_nilpotence_search: morphism is not a cycle");
    NilpotenceResult result;
    result.bound = nMax;
    std::optional<CurvedMorphism> power;
    for (int n = 1; n <= nMax; ++n) {
        power = power ? morphism_tensor(*power, alpha) : alpha;
        CurvedMorphism probe = p ? morphism_tensor(*power, CurvedMorphism::identity(*p))
                                 : *power;
        auto witness = solve_null_homotopy(probe);
        if (witness) {
            result.exponent = n;
            result.witness = std::move(witness);
            return result;
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// cohomological support and complexity through the curved transform
// ---------------------------------------------------------------------------

/// Support of the graded module presented by a homology presentation: the
/// union over cycle generators of the vanishing loci of their annihilators
/// modulo the boundary span.
inline Locus homology_support(const HomologyPresentation& pres) {
    Locus out = Locus::empty(pres.ring);
    for (const auto& z : pres.cycles) {
        // annihilator of the class of z in ambient/boundaries
        std::vector<VecPoly> all;
        all.push_back(z);
        for (const auto& b : pres.boundaries) all.push_back(b);
        auto syz = column_syzygies(pres.ring,
                                   static_cast<std::uint32_t>(pres.ambientDegrees.size()), all);
        std::vector<Polynomial> gens;
        for (const auto& s : syz) {
            Polynomial a = s.component(0);
            if (!a.isZero()) gens.push_back(a);
        }
        Ideal ann(pres.ring, detail::reduced_groebner_raw(pres.ring, gens));
        bool seen = false;
        for (const auto& c : out.components)
            if (c == ann) { seen = true; break; }
        if (!seen) out.components.push_back(std::move(ann));
    }
    return out;
}

/// V_E(M, N): the support of Ext over the Koszul algebra, computed through
/// the homology of the Hom complex of the curved transforms.
inline Locus cohomological_support(const DgEModule& m, const DgEModule& n) {
    if (!m.koszul().sameAs(n.koszul()))
        throw ValidationError("cohomological_support: koszul data differs");
    return homology_support(homology_presentation(bgg(m), bgg(n)));
}

/// Polynomial growth order of Ext: the pole order at t = 1 of the Hilbert
/// series of the Hom homology.  Needs the base ring to be the rationals so
/// graded pieces are finite dimensional.
inline int complexity(const DgEModule& m, const DgEModule& n) {
    if (!m.koszul().sameAs(n.koszul()))
        throw ValidationError("complexity: koszul data differs");
    if (m.koszul().base->variableCount() != 0)
        throw UnsupportedError("complexity: base ring must be the rationals");
    HomologyPresentation pres = homology_presentation(bgg(m), bgg(n));
    SubquotientPresentation sub{pres.ring, pres.ambientDegrees, pres.cycles, pres.boundaries};
    return pole_order_at_one(hilbert_series(sub));
}

} // namespace kcs
