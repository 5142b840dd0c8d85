#pragma once

#include "kcs/ideal.hpp"
#include "kcs/matrix.hpp"

namespace kcs {

/// Homogeneous map of graded free modules, the carrier for differentials and
/// presentation matrices.  Entry (i,j) is homogeneous of degree
/// sourceDegrees[j] + mapDegree - targetDegrees[i], or zero.
struct FreeModuleMap {
    Ring ring;
    std::vector<int> sourceDegrees;
    std::vector<int> targetDegrees;
    int mapDegree = 0;
    PolyMatrix entries; // entries[i][j], column j = image of source generator j

    static FreeModuleMap make(Ring ring, std::vector<int> sourceDegrees,
                              std::vector<int> targetDegrees, int mapDegree,
                              PolyMatrix entries) {
        FreeModuleMap f{std::move(ring), std::move(sourceDegrees), std::move(targetDegrees),
                        mapDegree, std::move(entries)};
        if (f.entries.size() != f.targetDegrees.size() || !is_rectangular(f.entries))
            throw ValidationError("free module map: matrix shape mismatch");
        if (col_count(f.entries) != f.sourceDegrees.size() && !f.entries.empty())
            throw ValidationError("free module map: column count mismatch");
        for (std::size_t i = 0; i < f.entries.size(); ++i)
            for (std::size_t j = 0; j < col_count(f.entries); ++j) {
                const Polynomial& e = f.entries[i][j];
                if (!same_ring(e.ring(), f.ring))
                    throw RingMismatchError("free module map entry from a different ring");
                long want = f.sourceDegrees[j] + f.mapDegree - f.targetDegrees[i];
                if (!e.isHomogeneousOfDegree(want))
                    throw ValidationError("free module map entry (" + std::to_string(i) + "," +
                                          std::to_string(j) + ") is not homogeneous of degree " +
                                          std::to_string(want) + ": " + e.str());
            }
        return f;
    }

    std::size_t sourceRank() const { return sourceDegrees.size(); }
    std::size_t targetRank() const { return targetDegrees.size(); }

    std::vector<VecPoly> columns() const {
        std::vector<VecPoly> cols;
        for (std::size_t j = 0; j < sourceRank(); ++j) {
            std::vector<Polynomial> comps;
            comps.reserve(targetRank());
            for (std::size_t i = 0; i < targetRank(); ++i) comps.push_back(entries[i][j]);
            cols.push_back(VecPoly::fromComponents(ring, comps));
        }
        return cols;
    }

    VecPoly apply(const VecPoly& v) const {
        VecPoly out(ring, static_cast<std::uint32_t>(targetRank()));
        auto comps = v.components();
        for (std::size_t j = 0; j < sourceRank(); ++j) {
            if (comps[j].isZero()) continue;
            for (std::size_t i = 0; i < targetRank(); ++i) {
                Polynomial t = entries[i][j] * comps[j];
                for (const auto& [m, c] : t.terms())
                    out.addTerm({static_cast<std::uint32_t>(i), m}, c);
            }
        }
        return out;
    }
};

/// Generating syzygies of the columns of D: vectors v with D v = 0.
inline std::vector<VecPoly> kernel_generators(const FreeModuleMap& D) {
    return column_syzygies(D.ring, static_cast<std::uint32_t>(D.targetRank()), D.columns());
}

/// The annihilator-style quotient {a in A : a*v lies in the column span of U},
/// returned with canonical (reduced Groebner) generators.
inline Ideal module_quotient(const FreeModuleMap& U, const VecPoly& v) {
    if (!same_ring(U.ring, v.ring()))
        throw RingMismatchError("module_quotient: rings differ");
    if (v.rank() != U.targetRank())
        throw ValidationError("module_quotient: vector lives in a different free module");
    std::vector<VecPoly> cols;
    cols.push_back(v);
    for (auto& c : U.columns()) cols.push_back(std::move(c));
    auto syz = column_syzygies(U.ring, static_cast<std::uint32_t>(U.targetRank()), cols);
    std::vector<Polynomial> gens;
    for (const auto& s : syz) {
        Polynomial a = s.component(0);
        if (!a.isZero()) gens.push_back(a);
    }
    Ideal quotient(U.ring, detail::reduced_groebner_raw(U.ring, gens));
    return groebner_basis(quotient);
}

/// Rank of a polynomial matrix over the fraction field of A/p, for a trusted
/// prime p.  Fraction-free cross-multiplication elimination; every entry is
/// kept in normal form modulo p, so the zero test is exact.
inline int rank_over_domain(const PolyMatrix& D, const Ideal& prime) {
    if (is_unit_ideal(prime)) throw ValidationError("rank_over_domain: not a prime (unit ideal)");
    const std::size_t rows = row_count(D), cols = col_count(D);
    PolyMatrix m = D;
    for (auto& row : m)
        for (auto& e : row) e = normal_form(e, prime);

    std::vector<bool> rowUsed(rows, false), colUsed(cols, false);
    int rank = 0;
    while (true) {
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = 0; i < rows && pr == rows; ++i) {
            if (rowUsed[i]) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                if (colUsed[j] || m[i][j].isZero()) continue;
                pr = i; pc = j;
                break;
            }
        }
        if (pr == rows) break;
        ++rank;
        rowUsed[pr] = true;
        colUsed[pc] = true;
        const Polynomial piv = m[pr][pc];
        for (std::size_t i = 0; i < rows; ++i) {
            if (rowUsed[i] || m[i][pc].isZero()) continue;
            const Polynomial factor = m[i][pc];
            for (std::size_t j = 0; j < cols; ++j) {
                if (colUsed[j] && j != pc) continue;
                m[i][j] = normal_form(piv * m[i][j] - factor * m[pr][j], prime);
            }
        }
    }
    return rank;
}

} // namespace kcs
