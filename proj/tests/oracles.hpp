#pragma once

// Test-only oracles: dense degreewise linear algebra over Q, independent of
// the Groebner-basis implementation they cross-check.

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "kcs/free_module.hpp"

namespace oracle {

using kcs::Monomial;
using kcs::Polynomial;
using kcs::Rational;
using kcs::Ring;
using kcs::VecPoly;

inline void enumerate_monomials(std::size_t vars, unsigned budget, Monomial& current,
                                std::size_t at, std::vector<Monomial>& out) {
    if (at == vars) {
        out.push_back(current);
        return;
    }
    for (unsigned e = 0; e <= budget; ++e) {
        current[at] = e;
        enumerate_monomials(vars, budget - e, current, at + 1, out);
    }
    current[at] = 0;
}

/// All monomials of total degree <= maxDegree, in a fixed enumeration order.
inline std::vector<Monomial> monomials_up_to(const Ring& ring, unsigned maxDegree) {
    std::vector<Monomial> out;
    Monomial current(ring->variableCount(), 0);
    enumerate_monomials(ring->variableCount(), maxDegree, current, 0, out);
    return out;
}

/// Dense exact solver: returns one solution of M x = rhs over Q, or nullopt.
/// M is a row-major dense rational matrix.
inline std::optional<std::vector<Rational>> solve_dense(std::vector<std::vector<Rational>> M,
                                                        std::vector<Rational> rhs) {
    const std::size_t rows = M.size();
    const std::size_t cols = rows == 0 ? 0 : M[0].size();
    std::vector<std::size_t> pivotCol;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (M[i][c] != 0) { sel = i; break; }
        if (sel == rows) continue;
        std::swap(M[sel], M[r]);
        std::swap(rhs[sel], rhs[r]);
        Rational inv = Rational(1) / M[r][c];
        for (std::size_t j = c; j < cols; ++j) M[r][j] *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            Rational f = M[i][c];
            for (std::size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivotCol.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (rhs[i] != 0) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t i = 0; i < pivotCol.size(); ++i) x[pivotCol[i]] = rhs[i];
    return x;
}

/// Nullspace basis of M over Q (dense, exact).
inline std::vector<std::vector<Rational>> nullspace_dense(std::vector<std::vector<Rational>> M) {
    const std::size_t rows = M.size();
    const std::size_t cols = rows == 0 ? 0 : M[0].size();
    std::vector<long> pivotOfCol(cols, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (M[i][c] != 0) { sel = i; break; }
        if (sel == rows) continue;
        std::swap(M[sel], M[r]);
        Rational inv = Rational(1) / M[r][c];
        for (std::size_t j = c; j < cols; ++j) M[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            Rational f = M[i][c];
            for (std::size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
        }
        pivotOfCol[c] = static_cast<long>(r);
        ++r;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (pivotOfCol[c] != -1) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[c] = 1;
        for (std::size_t j = 0; j < cols; ++j)
            if (pivotOfCol[j] != -1) v[j] = -M[static_cast<std::size_t>(pivotOfCol[j])][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Does target = sum_j c_j * cols[j] admit polynomial coefficients of total
/// degree <= coeffDegree?  Decided by dense linear algebra over Q.
inline bool expressible_dense(const Ring& ring, const std::vector<VecPoly>& cols,
                              const VecPoly& target, unsigned coeffDegree) {
    if (cols.empty()) return target.isZero();
    const std::uint32_t rank = cols.front().rank();
    unsigned resultDegree = 0;
    auto bump = [&](const VecPoly& v) {
        for (const auto& [t, c] : v.terms())
            resultDegree = std::max(resultDegree, kcs::total_degree(t.mono));
    };
    for (const auto& c : cols) bump(c);
    resultDegree += coeffDegree;
    bump(target);

    auto coeffMonos = monomials_up_to(ring, coeffDegree);
    auto rowMonos = monomials_up_to(ring, resultDegree);
    std::map<std::pair<std::uint32_t, Monomial>, std::size_t> rowIndex;
    for (std::uint32_t p = 0; p < rank; ++p)
        for (const auto& m : rowMonos) rowIndex[{p, m}] = rowIndex.size();

    const std::size_t nUnknowns = cols.size() * coeffMonos.size();
    std::vector<std::vector<Rational>> M(rowIndex.size(), std::vector<Rational>(nUnknowns, Rational(0)));
    std::vector<Rational> rhs(rowIndex.size(), Rational(0));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t mi = 0; mi < coeffMonos.size(); ++mi) {
            VecPoly shifted = cols[j].timesTerm(coeffMonos[mi], 1);
            for (const auto& [t, c] : shifted.terms()) {
                auto it = rowIndex.find({t.pos, t.mono});
                if (it == rowIndex.end()) return false; // degree bound too small
                M[it->second][j * coeffMonos.size() + mi] = c;
            }
        }
    for (const auto& [t, c] : target.terms()) {
        auto it = rowIndex.find({t.pos, t.mono});
        if (it == rowIndex.end()) return false;
        rhs[it->second] = c;
    }
    return solve_dense(std::move(M), std::move(rhs)).has_value();
}

/// All solutions v (entries of total degree <= entryDegree) of D v = 0,
/// as a basis of the dense solution space.
inline std::vector<VecPoly> kernel_dense(const kcs::FreeModuleMap& D, unsigned entryDegree) {
    const Ring& ring = D.ring;
    auto entryMonos = monomials_up_to(ring, entryDegree);
    unsigned resultDegree = entryDegree;
    for (const auto& row : D.entries)
        for (const auto& e : row) resultDegree = std::max(resultDegree, entryDegree + e.totalDegree());
    auto rowMonos = monomials_up_to(ring, resultDegree);

    std::map<std::pair<std::uint32_t, Monomial>, std::size_t> rowIndex;
    for (std::uint32_t p = 0; p < D.targetRank(); ++p)
        for (const auto& m : rowMonos) rowIndex[{p, m}] = rowIndex.size();

    const std::size_t nUnknowns = D.sourceRank() * entryMonos.size();
    std::vector<std::vector<Rational>> M(rowIndex.size(), std::vector<Rational>(nUnknowns, Rational(0)));
    for (std::size_t j = 0; j < D.sourceRank(); ++j)
        for (std::size_t mi = 0; mi < entryMonos.size(); ++mi)
            for (std::size_t i = 0; i < D.targetRank(); ++i) {
                Polynomial prod = D.entries[i][j].timesTerm(entryMonos[mi], 1);
                for (const auto& [m, c] : prod.terms())
                    M[rowIndex.at({static_cast<std::uint32_t>(i), m})][j * entryMonos.size() + mi] += c;
            }
    auto basis = nullspace_dense(std::move(M));
    std::vector<VecPoly> out;
    for (const auto& v : basis) {
        VecPoly w(ring, static_cast<std::uint32_t>(D.sourceRank()));
        for (std::size_t j = 0; j < D.sourceRank(); ++j)
            for (std::size_t mi = 0; mi < entryMonos.size(); ++mi) {
                const Rational& c = v[j * entryMonos.size() + mi];
                if (c != 0) w.addTerm({static_cast<std::uint32_t>(j), entryMonos[mi]}, c);
            }
        out.push_back(std::move(w));
    }
    return out;
}

/// Rank by brute-force minor enumeration (exact, exponential; tiny inputs).
inline int rank_by_minors(const kcs::PolyMatrix& D, const kcs::Ideal& prime) {
    using kcs::normal_form;
    const std::size_t rows = kcs::row_count(D), cols = kcs::col_count(D);
    kcs::PolyMatrix R = D;
    for (auto& row : R)
        for (auto& e : row) e = normal_form(e, prime);

    std::function<Polynomial(const std::vector<std::size_t>&, const std::vector<std::size_t>&)>
        det = [&](const std::vector<std::size_t>& ri, const std::vector<std::size_t>& ci) {
            if (ri.empty()) return Polynomial::one(R[0][0].ring());
            Polynomial acc(R[0][0].ring());
            for (std::size_t k = 0; k < ri.size(); ++k) {
                std::vector<std::size_t> subR(ri.begin() + 1, ri.end());
                std::vector<std::size_t> subC = ci;
                subC.erase(subC.begin() + static_cast<long>(k));
                Polynomial cof = R[ri[0]][ci[k]] * det(subR, subC);
                acc += (k % 2 == 0) ? cof : -cof;
            }
            return acc;
        };

    int best = 0;
    std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&, std::vector<std::size_t>&)>
        walk = [&](std::size_t ri, std::size_t ci, std::vector<std::size_t>& rsel,
                   std::vector<std::size_t>& csel) {
            if (!rsel.empty() && rsel.size() == csel.size()) {
                if (static_cast<int>(rsel.size()) > best &&
                    !normal_form(det(rsel, csel), prime).isZero())
                    best = static_cast<int>(rsel.size());
            }
            for (std::size_t i = ri; i < rows; ++i)
                for (std::size_t j = ci; j < cols; ++j) {
                    rsel.push_back(i);
                    csel.push_back(j);
                    walk(i + 1, j + 1, rsel, csel);
                    rsel.pop_back();
                    csel.pop_back();
                }
        };
    std::vector<std::size_t> rsel, csel;
    walk(0, 0, rsel, csel);
    return best;
}

} // namespace oracle
