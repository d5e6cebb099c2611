/*
 * dimension.hpp
 * -------------
 * Convex dependence and dimension theory of HS-kernels: everything reduces
 * to exact rank computation on the exponent gradients of the generating
 * L-monomials. An L-monomial is convexly dependent on a set exactly when
 * its gradient lies in the rational span of theirs (the constant part is
 * absorbed by <F>), so bases come from greedy Steinitz exchange, condeg is
 * a matrix rank, the catenary identity is arithmetic, and Jordan-Hoelder
 * chains are nested partial sums of a convex basis.
 */
#pragma once

#include "decompose.hpp"

namespace sktrop {

struct ExponentBasis {
    std::vector<Monomial> monomials;  // the selected independent L-monomials
    RatMat vectors;                   // their gradients
    int rank = 0;
};

namespace detail {

inline RatVec gradient(const Monomial& m) {
    if (mono_constant(m)) throw DomainError("convex dependence: constant L-monomial");
    RatVec g;
    for (long long e : m.exps) g.push_back(Rat(e));
    return g;
}

// Extract the generating L-monomials of an HS-kernel generator: the
// skeleton must be a single affine cell and the norm sum over the cell's
// canonical equations must regenerate the kernel. Returns nothing for
// non-HS input.
inline std::optional<std::vector<Monomial>> hs_monomials(const RationalExpr& f, int budget) {
    CellComplex skel = skel_complex(f, budget);
    if (skel.cells.size() != 1) return std::nullopt;
    const Cell& c = skel.cells[0];
    if (c.eq.empty() || !c.ge.empty()) return std::nullopt;
    std::vector<Monomial> mons = hs_monomials_of(c);
    std::optional<RationalExpr> gen;
    for (const Monomial& m : mons) {
        RationalExpr t = re_norm(mono_expr(f.n(), m, budget), budget);
        gen = gen ? re_add(*gen, t, budget) : t;
    }
    if (!kernel_equal(f, *gen, budget)) return std::nullopt;
    return mons;
}

}  // namespace detail

inline bool convex_dependent(const Monomial& f, const std::vector<Monomial>& S) {
    RatVec v = detail::gradient(f);
    RatMat rows;
    for (const Monomial& s : S) rows.push_back(detail::gradient(s));
    std::vector<size_t> pivots = rref(rows);
    return in_span(rows, pivots, std::move(v));
}

inline ExponentBasis convex_basis(const std::vector<Monomial>& S) {
    ExponentBasis b;
    RatMat rows;
    std::vector<size_t> pivots;
    for (const Monomial& s : S) {
        RatVec v = detail::gradient(s);
        if (in_span(rows, pivots, v)) continue;
        b.monomials.push_back(s);
        b.vectors.push_back(v);
        rows.push_back(std::move(v));
        pivots = rref(rows);
    }
    b.rank = static_cast<int>(b.vectors.size());
    return b;
}

// condeg of the ambient n-variable semifield.
inline int condeg(int n) { return n; }

// condeg of the HS-kernel generated by the given L-monomials.
inline int condeg(const std::vector<Monomial>& mons) { return convex_basis(mons).rank; }

// condeg of an HS-kernel given by a generator expression.
inline int condeg(const RationalExpr& L, int budget = kDefaultBudget) {
    auto mons = detail::hs_monomials(L, budget);
    if (!mons) throw DomainError("condeg: generator is not an HS-kernel");
    return condeg(*mons);
}

// The catenary identity: condeg of the quotient by L*R is n - condeg(L),
// independent of the region factor R as long as Skel(L*R) is nonempty.
inline int quotient_condeg(const RationalExpr& L, const RationalExpr& R,
                           int budget = kDefaultBudget) {
    int n = L.n();
    CellComplex joint = complex_intersection(skel_complex(L, budget), skel_complex(R, budget));
    if (joint.empty()) throw DomainError("quotient_condeg: empty joint skeleton");
    return n - condeg(L, budget);
}

// Jordan-Hoelder chain of an HS-kernel: nested partial norm sums over a
// convex basis b_1..b_u, longest first; every factor is an HP-kernel and
// the chain length is condeg(L).
inline std::vector<RationalExpr> jh_chain(const RationalExpr& L, int budget = kDefaultBudget) {
    auto mons = detail::hs_monomials(L, budget);
    if (!mons) throw DomainError("jh_chain: generator is not an HS-kernel");
    ExponentBasis b = convex_basis(*mons);
    int n = L.n();
    std::vector<RationalExpr> chain;
    std::optional<RationalExpr> gen;
    for (const Monomial& m : b.monomials) {
        RationalExpr t = re_norm(detail::mono_expr(n, m, budget), budget);
        gen = gen ? re_add(*gen, t, budget) : t;
        chain.push_back(*gen);
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

inline int hdim(int n) { return n; }

// A witness chain of maximal height n: the coordinate HS-kernels.
inline std::vector<RationalExpr> hdim_chain(int n, int budget = kDefaultBudget) {
    std::optional<RationalExpr> gen;
    std::vector<RationalExpr> chain;
    for (int i = 0; i < n; ++i) {
        RationalExpr t = re_norm(var_expr(n, i, budget), budget);
        gen = gen ? re_add(*gen, t, budget) : t;
        chain.push_back(*gen);
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

}  // namespace sktrop
