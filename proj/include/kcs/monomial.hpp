#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace kcs {

/// Exponent vector; the owning ring fixes the length and variable meaning.
using Monomial = std::vector<std::uint32_t>;

inline std::uint32_t total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), std::uint32_t{0});
}

inline bool is_one(const Monomial& m) {
    return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

inline bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

/// Exact quotient; caller guarantees divisibility.
inline Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

/// m : n, exponentwise max(m_i - n_i, 0).
inline Monomial mono_colon(const Monomial& m, const Monomial& n) {
    Monomial r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = m[i] > n[i] ? m[i] - n[i] : 0;
    return r;
}

namespace detail {

// Degree-reverse-lexicographic comparison on the variable window [lo, hi).
// Returns +1 if a > b, -1 if a < b, 0 on equality.
inline int degrevlex_block(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    long da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) { da += a[i]; db += b[i]; }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
}

} // namespace detail

/// Compare under degrevlex, optionally with the last `elimTail` variables as a
/// dominant block (an elimination order for those variables).
inline int mono_compare(const Monomial& a, const Monomial& b, int elimTail) {
    const std::size_t n = a.size();
    if (elimTail > 0) {
        const std::size_t lo = n - static_cast<std::size_t>(elimTail);
        if (int c = detail::degrevlex_block(a, b, lo, n)) return c;
        return detail::degrevlex_block(a, b, 0, lo);
    }
    return detail::degrevlex_block(a, b, 0, n);
}

/// "Greater-than" functor usable as a std::map comparator so that the leading
/// monomial is the first map entry.
struct MonoGreater {
    int elimTail = 0;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return mono_compare(a, b, elimTail) > 0;
    }
};

} // namespace kcs
