#pragma once

#include "kcs/polynomial.hpp"

namespace kcs {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

inline PolyMatrix zero_matrix(const Ring& ring, std::size_t rows, std::size_t cols) {
    return PolyMatrix(rows, std::vector<Polynomial>(cols, Polynomial(ring)));
}

inline PolyMatrix identity_matrix(const Ring& ring, std::size_t n) {
    PolyMatrix m = zero_matrix(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Polynomial::one(ring);
    return m;
}

inline std::size_t row_count(const PolyMatrix& m) { return m.size(); }
inline std::size_t col_count(const PolyMatrix& m) { return m.empty() ? 0 : m.front().size(); }

inline bool is_rectangular(const PolyMatrix& m) {
    for (const auto& row : m)
        if (row.size() != col_count(m)) return false;
    return true;
}

inline PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    const std::size_t r = row_count(a), k = col_count(a), c = col_count(b);
    if (k != row_count(b)) throw ValidationError("matrix product shape mismatch");
    if (r == 0 || c == 0) return {};
    const Ring& ring = a[0][0].ring();
    PolyMatrix out = zero_matrix(ring, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].isZero()) continue;
            for (std::size_t j = 0; j < c; ++j) {
                if (b[l][j].isZero()) continue;
                out[i][j] += a[i][l] * b[l][j];
            }
        }
    return out;
}

inline PolyMatrix mat_add(const PolyMatrix& a, const PolyMatrix& b) {
    if (row_count(a) != row_count(b) || col_count(a) != col_count(b))
        throw ValidationError("matrix sum shape mismatch");
    PolyMatrix out = a;
    for (std::size_t i = 0; i < row_count(a); ++i)
        for (std::size_t j = 0; j < col_count(a); ++j) out[i][j] += b[i][j];
    return out;
}

inline PolyMatrix mat_negate(PolyMatrix m) {
    for (auto& row : m)
        for (auto& e : row) e = -e;
    return m;
}

inline PolyMatrix mat_scale(const Polynomial& c, const PolyMatrix& m) {
    PolyMatrix out = m;
    for (auto& row : out)
        for (auto& e : row) e = c * e;
    return out;
}

inline bool mat_equal(const PolyMatrix& a, const PolyMatrix& b) {
    if (row_count(a) != row_count(b) || col_count(a) != col_count(b)) return false;
    for (std::size_t i = 0; i < row_count(a); ++i)
        for (std::size_t j = 0; j < col_count(a); ++j)
            if (a[i][j] != b[i][j]) return false;
    return true;
}

inline bool mat_is_zero(const PolyMatrix& m) {
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.isZero()) return false;
    return true;
}

inline PolyMatrix embed_matrix(const PolyMatrix& m, const Ring& target) {
    PolyMatrix out;
    out.reserve(m.size());
    for (const auto& row : m) {
        std::vector<Polynomial> r;
        r.reserve(row.size());
        for (const auto& e : row) r.push_back(embed(e, target));
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace kcs
