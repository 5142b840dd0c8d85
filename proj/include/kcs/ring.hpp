#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "kcs/errors.hpp"
#include "kcs/monomial.hpp"

namespace kcs {

/// A graded polynomial ring over the rationals.  Every variable carries an
/// even homological degree <= 0: base variables sit in degree 0, curvature
/// variables in degree -2.  The monomial order is degrevlex with the
/// variables in declaration order; `elimTail` marks a trailing block of
/// internal variables that dominates the order (used for saturation).
struct RingData {
    std::vector<std::string> names;
    std::vector<int> degrees;
    int elimTail = 0;
    std::map<std::string, int> indexOf;

    std::size_t variableCount() const { return names.size(); }

    int variableIndex(const std::string& name) const {
        auto it = indexOf.find(name);
        return it == indexOf.end() ? -1 : it->second;
    }

    MonoGreater order() const { return MonoGreater{elimTail}; }

    bool sameAs(const RingData& other) const {
        return names == other.names && degrees == other.degrees && elimTail == other.elimTail;
    }

    /// Homological degree of a monomial: sum of exponent * variable degree.
    long monomialDegree(const Monomial& m) const {
        long d = 0;
        for (std::size_t i = 0; i < m.size(); ++i)
            d += static_cast<long>(m[i]) * degrees[i];
        return d;
    }

    bool hasDegreeZeroVariable() const {
        for (int d : degrees)
            if (d == 0) return true;
        return false;
    }
};

using Ring = std::shared_ptr<const RingData>;

inline bool same_ring(const Ring& a, const Ring& b) {
    return a == b || (a && b && a->sameAs(*b));
}

inline Ring make_ring(const std::vector<std::pair<std::string, int>>& variables) {
    auto data = std::make_shared<RingData>();
    for (const auto& [name, degree] : variables) {
        if (name.empty())
            throw ValidationError("variable name must be nonempty");
        if (degree > 0 || degree % 2 != 0)
            throw ValidationError("variable '" + name + "' must have even degree <= 0, got " +
                                  std::to_string(degree));
        if (data->indexOf.count(name))
            throw ValidationError("duplicate variable name '" + name + "'");
        data->indexOf[name] = static_cast<int>(data->names.size());
        data->names.push_back(name);
        data->degrees.push_back(degree);
    }
    return data;
}

/// Ring with extra variables appended (degrees validated like make_ring).
inline Ring extend_ring(const Ring& base, const std::vector<std::pair<std::string, int>>& extra) {
    std::vector<std::pair<std::string, int>> vars;
    for (std::size_t i = 0; i < base->names.size(); ++i)
        vars.emplace_back(base->names[i], base->degrees[i]);
    vars.insert(vars.end(), extra.begin(), extra.end());
    return make_ring(vars);
}

namespace detail {

/// Internal: ring with one appended variable forming a dominant order block.
/// The fresh name starts with '~' so it can never collide with user variables.
inline Ring with_elim_variable(const Ring& base, const std::string& name = "~t") {
    auto data = std::make_shared<RingData>(*base);
    if (data->indexOf.count(name))
        throw ValidationError("internal variable name collision: " + name);
    data->indexOf[name] = static_cast<int>(data->names.size());
    data->names.push_back(name);
    data->degrees.push_back(0);
    data->elimTail = 1;
    return data;
}

} // namespace detail

} // namespace kcs
