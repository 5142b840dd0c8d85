#pragma once

#include <functional>

#include "kcs/curved.hpp"

namespace kcs {

/// Koszul setup: a base ring R of degree-0 variables, elements f_1..f_n, the
/// derived ring A = R[chi_1..chi_n] with |chi_i| = -2, and the curvature
/// w = f_1 chi_1 + ... + f_n chi_n.
struct KoszulData {
    Ring base;
    std::vector<Polynomial> f; // over base
    Ring extended;             // A
    Polynomial w;              // over extended

    std::size_t count() const { return f.size(); }

    int chiIndex(std::size_t i) const {
        return extended->variableIndex("chi" + std::to_string(i + 1));
    }

    bool sameAs(const KoszulData& o) const {
        if (!same_ring(base, o.base) || f.size() != o.f.size()) return false;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (f[i] != o.f[i]) return false;
        return true;
    }
};

inline KoszulData make_koszul(const Ring& base, std::vector<Polynomial> f) {
    for (int d : base->degrees)
        if (d != 0) throw ValidationError("koszul base ring must have only degree-0 variables");
    for (const auto& fi : f) {
        if (!same_ring(fi.ring(), base))
            throw RingMismatchError("koszul element from a different ring");
        if (!fi.isHomogeneousOfDegree(0))
            throw ValidationError("koszul element must have degree 0: " + fi.str());
    }
    std::vector<std::pair<std::string, int>> extra;
    for (std::size_t i = 0; i < f.size(); ++i)
        extra.emplace_back("chi" + std::to_string(i + 1), -2);
    Ring extended = extend_ring(base, extra);
    Polynomial w = Polynomial::zero(extended);
    for (std::size_t i = 0; i < f.size(); ++i) {
        int chi = extended->variableIndex("chi" + std::to_string(i + 1));
        w += embed(f[i], extended) * Polynomial::variable(extended, chi);
    }
    return KoszulData{base, std::move(f), std::move(extended), std::move(w)};
}

/// Bounded complex of finite free R-modules with n anticommuting odd
/// operators realizing the dg module structure over the Koszul algebra:
///   dF^2 = 0,   e_i e_j + e_j e_i = 0,   dF e_i + e_i dF = f_i * Id.
class DgEModule {
public:
    static DgEModule make(KoszulData koszul, std::vector<int> degrees, PolyMatrix dF,
                          std::vector<PolyMatrix> operators) {
        DgEModule m(std::move(koszul), std::move(degrees), std::move(dF), std::move(operators));
        m.validate();
        return m;
    }

    const KoszulData& koszul() const { return koszul_; }
    const std::vector<int>& degrees() const { return degrees_; }
    const PolyMatrix& differential() const { return dF_; }
    const std::vector<PolyMatrix>& operators() const { return ops_; }
    std::size_t rank() const { return degrees_.size(); }

private:
    DgEModule(KoszulData koszul, std::vector<int> degrees, PolyMatrix dF,
              std::vector<PolyMatrix> operators)
        : koszul_(std::move(koszul)), degrees_(std::move(degrees)), dF_(std::move(dF)),
          ops_(std::move(operators)) {}

    void checkShape(const PolyMatrix& m, int mapDegree, const std::string& what) const {
        // reuses the graded-map validation, including per-entry degree checks
        FreeModuleMap::make(koszul_.base, degrees_, degrees_, mapDegree, m);
        (void)what;
    }

    void validate() const {
        if (ops_.size() != koszul_.count())
            throw ValidationError("dg module must carry one operator per koszul element");
        checkShape(dF_, -1, "differential");
        for (std::size_t i = 0; i < ops_.size(); ++i) checkShape(ops_[i], +1, "operator");

        if (!mat_is_zero(mat_mul(dF_, dF_)))
            throw ValidationError("dg module differential does not square to zero");
        for (std::size_t i = 0; i < ops_.size(); ++i)
            for (std::size_t j = i; j < ops_.size(); ++j) {
                PolyMatrix anti = mat_add(mat_mul(ops_[i], ops_[j]), mat_mul(ops_[j], ops_[i]));
                if (!mat_is_zero(anti))
                    throw ValidationError("operators (" + std::to_string(i + 1) + "," +
                                          std::to_string(j + 1) + ") fail to anticommute");
            }
        for (std::size_t i = 0; i < ops_.size(); ++i) {
            PolyMatrix leibniz = mat_add(mat_mul(dF_, ops_[i]), mat_mul(ops_[i], dF_));
            PolyMatrix want = mat_scale(koszul_.f[i], identity_matrix(koszul_.base, rank()));
            if (!mat_equal(leibniz, want))
                throw ValidationError("operator " + std::to_string(i + 1) +
                                      " violates dF*e + e*dF = f*Id");
        }
    }

    KoszulData koszul_;
    std::vector<int> degrees_;
    PolyMatrix dF_;
    std::vector<PolyMatrix> ops_;
};

/// The Koszul algebra as a module over itself: basis e_S over subsets S of
/// {1..n} ordered by (size, lexicographic), degree |S|, with
/// d(e_S) = sum_t (-1)^{t-1} f_{i_t} e_{S minus i_t} and left multiplication
/// e_i e_S = 0 for i in S, else sign * e_{S union i}.
inline DgEModule koszul_algebra(const KoszulData& k) {
    const std::size_t n = k.count();
    std::vector<std::vector<std::size_t>> subsets; // each sorted increasing
    for (std::size_t size = 0; size <= n; ++size) {
        std::vector<std::size_t> idx(size);
        // enumerate size-subsets of {0..n-1} lexicographically
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                                std::size_t depth) {
            if (depth == size) {
                subsets.push_back(idx);
                return;
            }
            for (std::size_t v = start; v < n; ++v) {
                idx[depth] = v;
                rec(v + 1, depth + 1);
            }
        };
        rec(0, 0);
    }
    std::map<std::vector<std::size_t>, std::size_t> position;
    for (std::size_t p = 0; p < subsets.size(); ++p) position[subsets[p]] = p;

    const std::size_t r = subsets.size();
    std::vector<int> degrees(r);
    for (std::size_t p = 0; p < r; ++p) degrees[p] = static_cast<int>(subsets[p].size());

    PolyMatrix dF = zero_matrix(k.base, r, r);
    for (std::size_t p = 0; p < r; ++p) {
        const auto& S = subsets[p];
        for (std::size_t t = 0; t < S.size(); ++t) {
            std::vector<std::size_t> rest;
            for (std::size_t u = 0; u < S.size(); ++u)
                if (u != t) rest.push_back(S[u]);
            Polynomial coeff = (t % 2 == 0) ? k.f[S[t]] : -k.f[S[t]];
            dF[position[rest]][p] += coeff;
        }
    }

    std::vector<PolyMatrix> ops;
    for (std::size_t i = 0; i < n; ++i) {
        PolyMatrix e = zero_matrix(k.base, r, r);
        for (std::size_t p = 0; p < r; ++p) {
            const auto& S = subsets[p];
            if (std::find(S.begin(), S.end(), i) != S.end()) continue;
            std::vector<std::size_t> bigger = S;
            bigger.push_back(i);
            std::sort(bigger.begin(), bigger.end());
            std::size_t before = 0;
            for (std::size_t v : S)
                if (v < i) ++before;
            e[position[bigger]][p] = Polynomial::constant(k.base, before % 2 == 0 ? 1 : -1);
        }
        ops.push_back(std::move(e));
    }
    return DgEModule::make(k, std::move(degrees), std::move(dF), std::move(ops));
}

inline DgEModule dg_module(const KoszulData& k, std::vector<int> degrees, PolyMatrix dF,
                           std::vector<PolyMatrix> operators) {
    return DgEModule::make(k, std::move(degrees), std::move(dF), std::move(operators));
}

/// Mapping cone of r * id for a degree-0 scalar r, keeping the test corpus
/// closed under cones.  The operators extend as diag(-e_i, e_i), the sign
/// forced by the suspension action.
inline DgEModule dg_cone_scalar(const DgEModule& m, const Polynomial& r) {
    if (!same_ring(r.ring(), m.koszul().base))
        throw RingMismatchError("dg_cone_scalar: scalar from a different ring");
    if (!r.isHomogeneousOfDegree(0))
        throw ValidationError("dg_cone_scalar: scalar must have degree 0");
    const std::size_t rk = m.rank();
    std::vector<int> degrees;
    for (int d : m.degrees()) degrees.push_back(d + 1);
    for (int d : m.degrees()) degrees.push_back(d);
    const Ring& R = m.koszul().base;
    PolyMatrix dF = zero_matrix(R, 2 * rk, 2 * rk);
    for (std::size_t i = 0; i < rk; ++i)
        for (std::size_t j = 0; j < rk; ++j) {
            dF[i][j] = -m.differential()[i][j];
            dF[rk + i][rk + j] = m.differential()[i][j];
        }
    for (std::size_t i = 0; i < rk; ++i) dF[rk + i][i] = r;
    std::vector<PolyMatrix> ops;
    for (const auto& e : m.operators()) {
        PolyMatrix b = zero_matrix(R, 2 * rk, 2 * rk);
        for (std::size_t i = 0; i < rk; ++i)
            for (std::size_t j = 0; j < rk; ++j) {
                b[i][j] = -e[i][j];
                b[rk + i][rk + j] = e[i][j];
            }
        ops.push_back(std::move(b));
    }
    return DgEModule::make(m.koszul(), std::move(degrees), std::move(dF), std::move(ops));
}

/// The curved transform A tensor F with differential dF + sum chi_i * e_i.
/// Given a valid dg module the result must satisfy D^2 = w * Id; the curved
/// constructor re-checks this, so any failure here is an implementation bug.
inline CurvedModule bgg(const DgEModule& m) {
    const Ring& A = m.koszul().extended;
    PolyMatrix d = embed_matrix(m.differential(), A);
    for (std::size_t i = 0; i < m.koszul().count(); ++i) {
        Polynomial chi = Polynomial::variable(A, m.koszul().chiIndex(i));
        d = mat_add(d, mat_scale(chi, embed_matrix(m.operators()[i], A)));
    }
    return CurvedModule::make(A, m.koszul().w, m.degrees(), std::move(d));
}

/// Transport of an R-linear degree-0 chain map commuting with the operators:
/// the same matrix over A is a degree-0 cycle bgg(M) -> bgg(N).
inline CurvedMorphism bgg_morphism(const DgEModule& m, const DgEModule& n,
                                   const PolyMatrix& phi) {
    if (!m.koszul().sameAs(n.koszul()))
        throw ValidationError("bgg_morphism: koszul data differs");
    FreeModuleMap::make(m.koszul().base, m.degrees(), n.degrees(), 0, phi);
    PolyMatrix lhs = mat_mul(phi, m.differential());
    PolyMatrix rhs = mat_mul(n.differential(), phi);
    if (!mat_equal(lhs, rhs))
        throw ValidationError("bgg_morphism: map does not commute with the differential");
    for (std::size_t i = 0; i < m.koszul().count(); ++i)
        if (!mat_equal(mat_mul(phi, m.operators()[i]), mat_mul(n.operators()[i], phi)))
            throw ValidationError("bgg_morphism: map does not commute with operator " +
                                  std::to_string(i + 1));
    return CurvedMorphism(bgg(m), bgg(n), 0, embed_matrix(phi, m.koszul().extended));
}

} // namespace kcs
