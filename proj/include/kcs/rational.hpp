#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "kcs/errors.hpp"

namespace kcs {

using Rational = boost::multiprecision::cpp_rational;
using Integer  = boost::multiprecision::cpp_int;

/// Canonical text form "p/q" (or "p" when q = 1), denominator positive.
inline std::string rational_str(const Rational& q) {
    return q.str();
}

inline Rational parse_rational(const std::string& text) {
    try {
        if (text.empty()) throw std::exception();
        for (char c : text)
            if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
                throw std::exception();
        return Rational(text);
    } catch (const std::exception&) {
        throw ValidationError("invalid rational literal: '" + text + "'");
    }
}

} // namespace kcs
