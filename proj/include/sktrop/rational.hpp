/*
 * rational.hpp
 * ------------
 * Exact rational scalars for the whole library: a thin wrapper around
 * GMP-backed boost::multiprecision rationals plus strict string I/O in the
 * canonical "p", "-p", "p/q" forms used by every textual interface.
 */
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sktrop {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "p", "-p" or "p/q" with q > 0 after the slash; no whitespace, no signs on q.
inline Rat rat_from_string(std::string_view s) {
    auto bad = [&] { throw DomainError("malformed rational: '" + std::string(s) + "'"); };
    size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
    if (digits == 0) bad();
    if (i < s.size()) {
        if (s[i] != '/') bad();
        ++i;
        size_t qdigits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++qdigits;
        if (qdigits == 0 || i != s.size()) bad();
    }
    Rat r{std::string(s)};  // canonicalizes p/q
    if (denominator(r) == 0) bad();
    return r;
}

inline std::string rat_to_string(const Rat& r) {
    std::string num = numerator(r).str();
    if (denominator(r) == 1) return num;
    return num + "/" + denominator(r).str();
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

}  // namespace sktrop
