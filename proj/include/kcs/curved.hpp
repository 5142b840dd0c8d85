#pragma once

#include "kcs/free_module.hpp"

namespace kcs {

/// Finite free graded module with a degree -1 operator squaring to w times
/// the identity.  Column j of the differential is the image of generator j,
/// so entry (i,j) is homogeneous of degree d_j - 1 - d_i.
class CurvedModule {
public:
    static CurvedModule make(Ring ring, Polynomial curvature, std::vector<int> degrees,
                             PolyMatrix differential) {
        CurvedModule p(std::move(ring), std::move(curvature), std::move(degrees),
                       std::move(differential));
        p.validate();
        return p;
    }

    /// The tensor unit: rank one in degree 0 with zero differential.
    static CurvedModule unit(const Ring& ring) {
        return make(ring, Polynomial::zero(ring), {0}, zero_matrix(ring, 1, 1));
    }

    const Ring& ring() const { return ring_; }
    const Polynomial& curvature() const { return curvature_; }
    const std::vector<int>& degrees() const { return degrees_; }
    const PolyMatrix& differential() const { return diff_; }
    std::size_t rank() const { return degrees_.size(); }

    bool operator==(const CurvedModule& o) const {
        return same_ring(ring_, o.ring_) && curvature_ == o.curvature_ &&
               degrees_ == o.degrees_ && mat_equal(diff_, o.diff_);
    }

private:
    void validate() const {
        if (!same_ring(curvature_.ring(), ring_))
            throw RingMismatchError("curvature from a different ring");
        if (!curvature_.isZero() && !curvature_.isHomogeneousOfDegree(-2))
            throw ValidationError("curvature must be homogeneous of degree -2: " +
                                  curvature_.str());
        const std::size_t r = degrees_.size();
        if (diff_.size() != r || !is_rectangular(diff_) || (r > 0 && col_count(diff_) != r))
            throw ValidationError("differential must be a " + std::to_string(r) + "x" +
                                  std::to_string(r) + " matrix");
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                const Polynomial& e = diff_[i][j];
                if (!same_ring(e.ring(), ring_))
                    throw RingMismatchError("differential entry from a different ring");
                long want = degrees_[j] - 1 - degrees_[i];
                if (!e.isHomogeneousOfDegree(want))
                    throw ValidationError("differential entry (" + std::to_string(i) + "," +
                                          std::to_string(j) + ") must be homogeneous of degree " +
                                          std::to_string(want) + ", got " + e.str());
            }
        PolyMatrix sq = mat_mul(diff_, diff_);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                Polynomial want = (i == j) ? curvature_ : Polynomial::zero(ring_);
                if (sq[i][j] != want)
                    throw ValidationError(
                        "curvature mismatch: (D^2 - w*Id) is nonzero first at entry (" +
                        std::to_string(i) + "," + std::to_string(j) + "): " +
                        (sq[i][j] - want).str());
            }
    }

    CurvedModule(Ring ring, Polynomial curvature, std::vector<int> degrees, PolyMatrix diff)
        : ring_(std::move(ring)), curvature_(std::move(curvature)), degrees_(std::move(degrees)),
          diff_(std::move(diff)) {}

    Ring ring_;
    Polynomial curvature_;
    std::vector<int> degrees_;
    PolyMatrix diff_;
};

inline CurvedModule shift(const CurvedModule& p) {
    std::vector<int> degrees = p.degrees();
    for (int& d : degrees) d += 1;
    return CurvedModule::make(p.ring(), p.curvature(), std::move(degrees),
                              mat_negate(p.differential()));
}

inline CurvedModule direct_sum(const CurvedModule& a, const CurvedModule& b) {
    if (!same_ring(a.ring(), b.ring()))
        throw RingMismatchError("direct_sum: rings differ");
    if (a.curvature() != b.curvature())
        throw ValidationError("direct_sum: curvature mismatch");
    const std::size_t ra = a.rank(), rb = b.rank();
    std::vector<int> degrees = a.degrees();
    degrees.insert(degrees.end(), b.degrees().begin(), b.degrees().end());
    PolyMatrix d = zero_matrix(a.ring(), ra + rb, ra + rb);
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ra; ++j) d[i][j] = a.differential()[i][j];
    for (std::size_t i = 0; i < rb; ++i)
        for (std::size_t j = 0; j < rb; ++j) d[ra + i][ra + j] = b.differential()[i][j];
    return CurvedModule::make(a.ring(), a.curvature(), std::move(degrees), std::move(d));
}

/// Homogeneous A-linear map between curved modules with the same curvature.
/// Rows index target generators, columns source generators; entry (i,j) is
/// homogeneous of degree sourceDegrees[j] + degree - targetDegrees[i].
class CurvedMorphism {
public:
    CurvedMorphism(CurvedModule source, CurvedModule target, int degree, PolyMatrix matrix)
        : source_(std::move(source)), target_(std::move(target)), degree_(degree),
          matrix_(std::move(matrix)) {
        if (!same_ring(source_.ring(), target_.ring()))
            throw RingMismatchError("morphism: source and target rings differ");
        if (source_.curvature() != target_.curvature())
            throw ValidationError("morphism: source and target curvature differ");
        if (matrix_.size() != target_.rank() || !is_rectangular(matrix_) ||
            (target_.rank() > 0 && col_count(matrix_) != source_.rank()))
            throw ValidationError("morphism: matrix shape mismatch");
        for (std::size_t i = 0; i < target_.rank(); ++i)
            for (std::size_t j = 0; j < source_.rank(); ++j) {
                long want = source_.degrees()[j] + degree_ - target_.degrees()[i];
                if (!matrix_[i][j].isHomogeneousOfDegree(want))
                    throw ValidationError("morphism entry (" + std::to_string(i) + "," +
                                          std::to_string(j) +
                                          ") must be homogeneous of degree " +
                                          std::to_string(want) + ", got " + matrix_[i][j].str());
            }
    }

    static CurvedMorphism identity(const CurvedModule& p) {
        return CurvedMorphism(p, p, 0, identity_matrix(p.ring(), p.rank()));
    }

    /// p * id, a cycle of degree |p| for homogeneous p.
    static CurvedMorphism scalar(const Polynomial& p, const CurvedModule& m) {
        auto deg = p.homogeneousDegree();
        if (!deg) throw ValidationError("scalar morphism needs a homogeneous polynomial");
        return CurvedMorphism(m, m, static_cast<int>(*deg),
                              mat_scale(p, identity_matrix(m.ring(), m.rank())));
    }

    const CurvedModule& source() const { return source_; }
    const CurvedModule& target() const { return target_; }
    int degree() const { return degree_; }
    const PolyMatrix& matrix() const { return matrix_; }

    /// Chain condition D' F - (-1)^{|F|} F D = 0.
    bool isCycle() const {
        PolyMatrix lhs = mat_mul(target_.differential(), matrix_);
        PolyMatrix rhs = mat_mul(matrix_, source_.differential());
        if (degree_ % 2 != 0) rhs = mat_negate(rhs);
        return mat_equal(lhs, rhs);
    }

private:
    CurvedModule source_;
    CurvedModule target_;
    int degree_;
    PolyMatrix matrix_;
};

inline CurvedMorphism compose(const CurvedMorphism& f, const CurvedMorphism& g) {
    if (!(g.target() == f.source()))
        throw ValidationError("compose: target/source mismatch");
    return CurvedMorphism(g.source(), f.target(), f.degree() + g.degree(),
                          mat_mul(f.matrix(), g.matrix()));
}

/// Mapping cone of a degree-0 cycle, with blocks [shift(source), target].
inline CurvedModule cone(const CurvedMorphism& f) {
    if (f.degree() != 0 || !f.isCycle())
        throw ValidationError("cone: morphism must be a degree-0 cycle");
    const CurvedModule& src = f.source();
    const CurvedModule& tgt = f.target();
    const std::size_t rs = src.rank(), rt = tgt.rank();
    std::vector<int> degrees;
    for (int d : src.degrees()) degrees.push_back(d + 1);
    for (int d : tgt.degrees()) degrees.push_back(d);
    PolyMatrix d = zero_matrix(src.ring(), rs + rt, rs + rt);
    for (std::size_t i = 0; i < rs; ++i)
        for (std::size_t j = 0; j < rs; ++j) d[i][j] = -src.differential()[i][j];
    for (std::size_t i = 0; i < rt; ++i)
        for (std::size_t j = 0; j < rs; ++j) d[rs + i][j] = f.matrix()[i][j];
    for (std::size_t i = 0; i < rt; ++i)
        for (std::size_t j = 0; j < rt; ++j) d[rs + i][rs + j] = tgt.differential()[i][j];
    return CurvedModule::make(src.ring(), src.curvature(), std::move(degrees), std::move(d));
}

/// Tensor product; curvatures add.  Generator (i,k) is g_i tensor g'_k at
/// flat index i * rank(b) + k.
inline CurvedModule tensor(const CurvedModule& a, const CurvedModule& b) {
    if (!same_ring(a.ring(), b.ring()))
        throw RingMismatchError("tensor: rings differ");
    const std::size_t ra = a.rank(), rb = b.rank();
    const Ring& ring = a.ring();
    std::vector<int> degrees(ra * rb);
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t k = 0; k < rb; ++k) degrees[i * rb + k] = a.degrees()[i] + b.degrees()[k];
    PolyMatrix d = zero_matrix(ring, ra * rb, ra * rb);
    for (std::size_t j = 0; j < ra; ++j)
        for (std::size_t l = 0; l < rb; ++l) {
            const std::size_t colIdx = j * rb + l;
            // D ⊗ Id
            for (std::size_t i = 0; i < ra; ++i) {
                if (a.differential()[i][j].isZero()) continue;
                d[i * rb + l][colIdx] += a.differential()[i][j];
            }
            // S ⊗ D' with the sign (-1)^{deg g_j}
            const bool odd = (a.degrees()[j] % 2 + 2) % 2 == 1;
            for (std::size_t k = 0; k < rb; ++k) {
                if (b.differential()[k][l].isZero()) continue;
                Polynomial e = b.differential()[k][l];
                d[j * rb + k][colIdx] += odd ? -e : e;
            }
        }
    return CurvedModule::make(ring, a.curvature() + b.curvature(), std::move(degrees),
                              std::move(d));
}

/// f ⊗ g with the Koszul sign (-1)^{|g| * |x|} on x ⊗ y.
inline CurvedMorphism morphism_tensor(const CurvedMorphism& f, const CurvedMorphism& g) {
    CurvedModule src = tensor(f.source(), g.source());
    CurvedModule tgt = tensor(f.target(), g.target());
    const std::size_t fr = f.target().rank(), fc = f.source().rank();
    const std::size_t gr = g.target().rank(), gc = g.source().rank();
    PolyMatrix m = zero_matrix(f.source().ring(), fr * gr, fc * gc);
    const bool gOdd = (g.degree() % 2 + 2) % 2 == 1;
    for (std::size_t j = 0; j < fc; ++j) {
        const bool srcOdd = (f.source().degrees()[j] % 2 + 2) % 2 == 1;
        const bool negate = gOdd && srcOdd;
        for (std::size_t l = 0; l < gc; ++l)
            for (std::size_t i = 0; i < fr; ++i) {
                if (f.matrix()[i][j].isZero()) continue;
                for (std::size_t k = 0; k < gr; ++k) {
                    if (g.matrix()[k][l].isZero()) continue;
                    Polynomial e = f.matrix()[i][j] * g.matrix()[k][l];
                    m[i * gr + k][j * gc + l] = negate ? -e : e;
                }
            }
    }
    return CurvedMorphism(std::move(src), std::move(tgt), f.degree() + g.degree(), std::move(m));
}

// ---------------------------------------------------------------------------
// Hom complexes
// ---------------------------------------------------------------------------

/// Basis bookkeeping for Hom_A(P, P'): basis element (k,i) sends source
/// generator i to target generator k, has degree d'_k - d_i, and sits at
/// flat index k * rank(P) + i.
struct HomComplex {
    CurvedModule source;
    CurvedModule target;
    CurvedModule module; // the Hom complex as a curved module, curvature w - v

    std::size_t index(std::size_t k, std::size_t i) const { return k * source.rank() + i; }
};

inline HomComplex hom_complex_full(const CurvedModule& p, const CurvedModule& q) {
    if (!same_ring(p.ring(), q.ring()))
        throw RingMismatchError("hom_complex: rings differ");
    const Ring& ring = p.ring();
    const std::size_t rs = p.rank(), rt = q.rank();
    const std::size_t n = rs * rt;
    std::vector<int> degrees(n);
    for (std::size_t k = 0; k < rt; ++k)
        for (std::size_t i = 0; i < rs; ++i) degrees[k * rs + i] = q.degrees()[k] - p.degrees()[i];
    PolyMatrix d = zero_matrix(ring, n, n);
    for (std::size_t k = 0; k < rt; ++k)
        for (std::size_t i = 0; i < rs; ++i) {
            const std::size_t col = k * rs + i;
            // post-compose with D'
            for (std::size_t m = 0; m < rt; ++m) {
                if (q.differential()[m][k].isZero()) continue;
                d[m * rs + i][col] += q.differential()[m][k];
            }
            // pre-compose with D, sign -(-1)^{|e_{ki}|}
            const bool odd = ((degrees[col] % 2) + 2) % 2 == 1;
            for (std::size_t j = 0; j < rs; ++j) {
                if (p.differential()[i][j].isZero()) continue;
                Polynomial e = p.differential()[i][j];
                d[k * rs + j][col] += odd ? e : -e;
            }
        }
    HomComplex h{p, q,
                 CurvedModule::make(ring, q.curvature() - p.curvature(), std::move(degrees),
                                    std::move(d))};
    return h;
}

inline CurvedModule hom_complex(const CurvedModule& p, const CurvedModule& q) {
    return hom_complex_full(p, q).module;
}

/// P^vee = Hom_A(P, A): degrees negate and entries pick up the usual sign.
inline CurvedModule dual(const CurvedModule& p) {
    const std::size_t r = p.rank();
    std::vector<int> degrees(r);
    for (std::size_t i = 0; i < r; ++i) degrees[i] = -p.degrees()[i];
    PolyMatrix d = zero_matrix(p.ring(), r, r);
    for (std::size_t i = 0; i < r; ++i) {
        const bool odd = (p.degrees()[i] % 2 + 2) % 2 == 1;
        for (std::size_t j = 0; j < r; ++j) {
            Polynomial e = p.differential()[i][j];
            if (e.isZero()) continue;
            d[j][i] = odd ? e : -e;
        }
    }
    return CurvedModule::make(p.ring(), -p.curvature(), std::move(degrees), std::move(d));
}

/// Flatten a morphism to its coordinate vector over the Hom basis.
inline VecPoly vec_morphism(const HomComplex& h, const CurvedMorphism& f) {
    const std::size_t rs = h.source.rank(), rt = h.target.rank();
    VecPoly v(h.source.ring(), static_cast<std::uint32_t>(rs * rt));
    for (std::size_t k = 0; k < rt; ++k)
        for (std::size_t i = 0; i < rs; ++i)
            for (const auto& [m, c] : f.matrix()[k][i].terms())
                v.addTerm({static_cast<std::uint32_t>(h.index(k, i)), m}, c);
    return v;
}

inline CurvedMorphism unvec_morphism(const HomComplex& h, int degree, const VecPoly& v) {
    const std::size_t rs = h.source.rank(), rt = h.target.rank();
    PolyMatrix m = zero_matrix(h.source.ring(), rt, rs);
    for (const auto& [t, c] : v.terms()) {
        std::size_t k = t.pos / rs, i = t.pos % rs;
        m[k][i].addTerm(t.mono, c);
    }
    return CurvedMorphism(h.source, h.target, degree, std::move(m));
}

/// Witness beta with Hom-differential(beta) = f, when f is a boundary.
/// Solved exactly as membership of vec(f) in the column span of the Hom
/// differential; the returned witness re-verifies by matrix arithmetic.
inline std::optional<CurvedMorphism> solve_null_homotopy(const CurvedMorphism& f) {
    if (!f.isCycle()) throw ValidationError("solve_null_homotopy: morphism is not a cycle");
    HomComplex h = hom_complex_full(f.source(), f.target());
    FreeModuleMap dmap = FreeModuleMap::make(h.module.ring(), h.module.degrees(),
                                             h.module.degrees(), -1, h.module.differential());
    SpanSolver span(h.module.ring(), static_cast<std::uint32_t>(h.module.rank()),
                    dmap.columns());
    auto witness = span.express(vec_morphism(h, f));
    if (!witness) return std::nullopt;

    const std::size_t rs = f.source().rank(), rt = f.target().rank();
    PolyMatrix beta = zero_matrix(f.source().ring(), rt, rs);
    for (std::size_t k = 0; k < rt; ++k)
        for (std::size_t i = 0; i < rs; ++i) {
            long want = f.source().degrees()[i] + f.degree() + 1 - f.target().degrees()[k];
            beta[k][i] = (*witness)[h.index(k, i)].homogeneousComponent(want);
        }
    CurvedMorphism b(f.source(), f.target(), f.degree() + 1, std::move(beta));
    // exact re-verification: D' beta - (-1)^{|beta|} beta D == f
    PolyMatrix check = mat_mul(f.target().differential(), b.matrix());
    PolyMatrix tail = mat_mul(b.matrix(), f.source().differential());
    if (b.degree() % 2 == 0) tail = mat_negate(tail);
    check = mat_add(check, tail);
    if (!mat_equal(check, f.matrix()))
        throw Error("internal error: null-homotopy witness failed verification");
    return b;
}

/// P is the zero object of the homotopy category exactly when the identity
/// admits a null homotopy.
inline bool is_zero_object(const CurvedModule& p) {
    return solve_null_homotopy(CurvedMorphism::identity(p)).has_value();
}

/// Presentation of H(Hom_A(P, P')) as cycles modulo boundaries inside the
/// free module on the Hom basis.
struct HomologyPresentation {
    Ring ring;
    std::vector<int> ambientDegrees;
    std::vector<VecPoly> cycles;     // kernel generators of the Hom differential
    std::vector<VecPoly> boundaries; // nonzero columns of the Hom differential

    /// Exact checks: cycles are killed by the differential, boundaries lie in
    /// the span of the cycles (module normal forms).
    bool verify(const FreeModuleMap& homDiff) const {
        for (const auto& z : cycles)
            if (!homDiff.apply(z).isZero()) return false;
        auto gb = module_groebner(ring, static_cast<std::uint32_t>(ambientDegrees.size()), cycles);
        for (const auto& b : boundaries)
            if (!normal_form(b, gb).isZero()) return false;
        return true;
    }
};

inline HomologyPresentation homology_presentation(const CurvedModule& p, const CurvedModule& q) {
    if (!same_ring(p.ring(), q.ring()))
        throw RingMismatchError("homology_presentation: rings differ");
    if (!(p.curvature() == q.curvature()))
        throw ValidationError("homology_presentation: curvature mismatch, Hom complex is curved");
    HomComplex h = hom_complex_full(p, q);
    FreeModuleMap dmap = FreeModuleMap::make(h.module.ring(), h.module.degrees(),
                                             h.module.degrees(), -1, h.module.differential());
    HomologyPresentation pres;
    pres.ring = h.module.ring();
    pres.ambientDegrees = h.module.degrees();
    pres.cycles = kernel_generators(dmap);
    for (auto& c : dmap.columns())
        if (!c.isZero()) pres.boundaries.push_back(std::move(c));
    for (const auto& z : pres.cycles)
        if (!dmap.apply(z).isZero())
            throw Error("internal error: cycle generator not killed by the differential");
    return pres;
}

} // namespace kcs
