/*
 * scalar.hpp
 * ----------
 * The standard supertropical semifield over Q in logarithmic scale.
 * An element is a rational magnitude plus a tangible/ghost layer; the
 * multiplicative unit is t(0). There is no zero element.
 */
#pragma once

#include <string>

#include "rational.hpp"

namespace sktrop {

enum class Layer { tangible, ghost };

struct Scalar {
    Rat magnitude;
    Layer layer = Layer::tangible;

    bool ghost() const { return layer == Layer::ghost; }
    bool tangible() const { return layer == Layer::tangible; }
    bool operator==(const Scalar&) const = default;
};

inline Scalar t(Rat m) { return {std::move(m), Layer::tangible}; }
inline Scalar g(Rat m) { return {std::move(m), Layer::ghost}; }

// nu: idempotent projection onto the ghost layer.
inline Scalar nu(const Scalar& a) { return {a.magnitude, Layer::ghost}; }

enum class NuCmp { less, nu_equal, greater };

inline NuCmp nu_compare(const Scalar& a, const Scalar& b) {
    if (a.magnitude < b.magnitude) return NuCmp::less;
    if (a.magnitude > b.magnitude) return NuCmp::greater;
    return NuCmp::nu_equal;
}

inline bool nu_equal(const Scalar& a, const Scalar& b) { return a.magnitude == b.magnitude; }
inline bool nu_leq(const Scalar& a, const Scalar& b) { return a.magnitude <= b.magnitude; }

// a + b: larger magnitude wins with its layer; nu-equal magnitudes go ghost.
inline Scalar add(const Scalar& a, const Scalar& b) {
    switch (nu_compare(a, b)) {
        case NuCmp::greater: return a;
        case NuCmp::less: return b;
        default: return g(a.magnitude);
    }
}

inline Scalar mul(const Scalar& a, const Scalar& b) {
    return {a.magnitude + b.magnitude,
            (a.ghost() || b.ghost()) ? Layer::ghost : Layer::tangible};
}

// The (*)-automorphism: multiplicative inverse of the magnitude, layer kept.
inline Scalar star(const Scalar& a) { return {-a.magnitude, a.layer}; }

// |a| = a + a*.
inline Scalar nu_norm(const Scalar& a) { return add(a, star(a)); }

// a ∧ b = (a* + b*)*.
inline Scalar wedge(const Scalar& a, const Scalar& b) { return star(add(star(a), star(b))); }

inline Scalar pow(const Scalar& a, long long k) {
    if (k == 0) return t(0);
    return {a.magnitude * k, a.layer};
}

inline std::string to_string(const Scalar& a) {
    return (a.tangible() ? "t(" : "g(") + rat_to_string(a.magnitude) + ")";
}

}  // namespace sktrop
