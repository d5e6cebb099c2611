/*
 * kernel.hpp
 * ----------
 * The lattice of principal kernels, presented by generators: products and
 * intersections, exact membership with an explicit power witness,
 * boundedness, regularity, corner-internality, orthogonality, and the
 * double polar.
 *
 * Everything reduces to the piecewise-affine magnitude phi_f(x) = |log f(x)|
 * of the norm |f|: on each full-dimensional cell of the dominance refinement
 * phi_f is a single affine functional, and g lies in <f> exactly when
 * phi_g <= k phi_f pointwise for some integer k. The membership test checks
 * the two per-cell obstructions (skeleton containment and growth at
 * infinity) and then finds the least such k by doubling and bisection.
 */
#pragma once

#include "complex.hpp"

namespace sktrop {

// ---- generators of lattice operations ---------------------------------------

inline RationalExpr kernel_product(const RationalExpr& f, const RationalExpr& g,
                                   int budget = kDefaultBudget) {
    return re_mul(re_norm(f, budget), re_norm(g, budget), budget);
}

inline RationalExpr kernel_intersection(const RationalExpr& f, const RationalExpr& g,
                                        int budget = kDefaultBudget) {
    return re_wedge(re_norm(f, budget), re_norm(g, budget), budget);
}

// |f| wedged with the constant norm |t(1)|: the generator of K(f) /\ F-unit ball.
inline RationalExpr omega(const RationalExpr& f, int budget = kDefaultBudget) {
    return re_wedge(re_norm(f, budget), re_norm(const_expr(f.n(), t(1))), budget);
}

// ---- piecewise-affine magnitudes ----------------------------------------------

namespace detail {

inline std::vector<Aff> affines_of(const Polynomial& p) {
    std::vector<Aff> out;
    for (const Monomial& m : p.ms) out.push_back(to_affine(m));
    return out;
}

// One closed region on which phi_f = | |f| magnitude | is a single
// nonnegative affine functional.
struct PhiCell {
    std::vector<Aff> ge;
    Aff phi;
};

// Covering of Q^n by dominance-pair cells of f with the sign of the
// magnitude resolved on each; empty combinations are discarded.
inline std::vector<PhiCell> phi_cells(const RationalExpr& f) {
    int n = f.n();
    std::vector<Aff> H = affines_of(f.num), G = affines_of(f.den);
    std::vector<PhiCell> out;
    auto try_push = [&](PhiCell&& c) {
        std::vector<LinCon> cons;
        for (const Aff& a : c.ge) cons.push_back({a, Rel::ge});
        if (lp_point(n, cons)) out.push_back(std::move(c));
    };
    for (size_t i = 0; i < H.size(); ++i)
        for (size_t j = 0; j < G.size(); ++j) {
            std::vector<Aff> base;
            for (size_t l = 0; l < H.size(); ++l)
                if (l != i) base.push_back(aff_sub(H[i], H[l]));
            for (size_t m = 0; m < G.size(); ++m)
                if (m != j) base.push_back(aff_sub(G[j], G[m]));
            Aff d = aff_sub(H[i], G[j]);
            if (d.is_zero()) {
                try_push({std::move(base), Aff{Rat(0), RatVec(n, Rat(0))}});
                continue;
            }
            PhiCell pos{base, d};
            pos.ge.push_back(d);
            try_push(std::move(pos));
            PhiCell neg{std::move(base), aff_neg(d)};
            neg.ge.push_back(aff_neg(d));
            try_push(std::move(neg));
        }
    return out;
}

inline Aff aff_scale(const Aff& a, const Rat& s) {
    Aff r{a.c * s, a.g};
    for (Rat& x : r.g) x *= s;
    return r;
}

}  // namespace detail

// ---- boundedness ----------------------------------------------------------------

struct BoundednessResult {
    bool bounded = false;
    Rat bound;                 // the attained extreme magnitude when bounded
    std::vector<Rat> witness;  // point attaining it (or in an unbounded cell)
};

// Is inf_x phi_f(x) > 0? Equivalent to Skel(f) being empty; the minimum is
// always attained, so the witness is a skeleton point whenever unbounded.
inline BoundednessResult bounded_below(const RationalExpr& f, int budget = kDefaultBudget) {
    check_budget(f.num, budget);
    check_budget(f.den, budget);
    int n = f.n();
    BoundednessResult out;
    bool first = true;
    for (const detail::PhiCell& pc : detail::phi_cells(f)) {
        Cell c{{}, pc.ge, {}};
        LpResult mn = cell_min(n, c, pc.phi);
        // phi >= 0 on the cell, so the LP cannot be unbounded
        if (first || mn.value < out.bound) {
            out.bound = mn.value;
            out.witness = mn.point;
            first = false;
        }
        if (out.bound == 0) break;
    }
    out.bounded = out.bound > 0;
    return out;
}

// Is sup_x phi_f(x) finite?
inline BoundednessResult bounded_above(const RationalExpr& f, int budget = kDefaultBudget) {
    check_budget(f.num, budget);
    check_budget(f.den, budget);
    int n = f.n();
    BoundednessResult out;
    out.bounded = true;
    bool first = true;
    for (const detail::PhiCell& pc : detail::phi_cells(f)) {
        Cell c{{}, pc.ge, {}};
        LpResult mx = cell_max(n, c, pc.phi);
        if (mx.status != LpStatus::optimal) {
            out.bounded = false;
            out.bound = 0;
            out.witness = *cell_point(n, c);
            return out;
        }
        if (first || mx.value > out.bound) {
            out.bound = mx.value;
            out.witness = mx.point;
            first = false;
        }
    }
    return out;
}

// ---- membership --------------------------------------------------------------------

struct MemberResult {
    bool member = false;
    long long witness_k = 0;          // least k with phi_g <= k phi_f, when member
    std::optional<Cell> bad_cell;     // a region witnessing failure otherwise
};

inline constexpr long long kMemberCap = 1LL << 40;

// Is g in the principal kernel generated by f?
inline MemberResult member(const RationalExpr& g, const RationalExpr& f,
                           int budget = kDefaultBudget) {
    check_budget(f.num, budget);
    check_budget(f.den, budget);
    check_budget(g.num, budget);
    check_budget(g.den, budget);
    int n = f.n();
    std::vector<detail::PhiCell> fcells = detail::phi_cells(f), gcells = detail::phi_cells(g);

    MemberResult out;
    long long k_needed = 1;
    for (const detail::PhiCell& fc : fcells)
        for (const detail::PhiCell& gc : gcells) {
            Cell cell;
            cell.ge = fc.ge;
            cell.ge.insert(cell.ge.end(), gc.ge.begin(), gc.ge.end());
            if (!feasible(n, cell)) continue;

            // skeleton containment: phi_g must vanish wherever phi_f does
            Cell zero = cell;
            zero.eq.push_back(fc.phi);
            LpResult zx = cell_max(n, zero, gc.phi);
            if (zx.status == LpStatus::unbounded ||
                (zx.status == LpStatus::optimal && zx.value > 0)) {
                out.bad_cell = canonicalize_cell(n, zero);
                if (!out.bad_cell) out.bad_cell = zero;
                return out;
            }
            // growth at infinity: phi_g bounded where phi_f is
            Cell low = cell;
            low.ge.push_back(aff_sub(Aff{Rat(1), RatVec(n, Rat(0))}, fc.phi));
            LpResult lx = cell_max(n, low, gc.phi);
            if (lx.status == LpStatus::unbounded) {
                out.bad_cell = canonicalize_cell(n, low);
                if (!out.bad_cell) out.bad_cell = low;
                return out;
            }

            // least integer k with k phi_f >= phi_g on this cell
            auto admits = [&](long long k) {
                Aff d = aff_sub(detail::aff_scale(fc.phi, Rat(k)), gc.phi);
                LpResult mn = cell_min(n, cell, d);
                return mn.status == LpStatus::optimal && mn.value >= 0;
            };
            if (admits(k_needed)) continue;
            long long hi = 2 * k_needed;
            while (hi <= kMemberCap && !admits(hi)) hi *= 2;
            if (hi > kMemberCap) {
                out.bad_cell = canonicalize_cell(n, cell);
                if (!out.bad_cell) out.bad_cell = cell;
                return out;
            }
            long long lo = k_needed;  // admits(lo) is false
            while (hi - lo > 1) {
                long long mid = lo + (hi - lo) / 2;
                (admits(mid) ? hi : lo) = mid;
            }
            k_needed = hi;
        }
    out.member = true;
    out.witness_k = k_needed;
    return out;
}

inline bool kernel_equal(const RationalExpr& f, const RationalExpr& g,
                         int budget = kDefaultBudget) {
    return member(g, f, budget).member && member(f, g, budget).member;
}

// Equality of the kernels cut down to the region where |alpha| caps the norm:
// K(f) and K(g) agree modulo the bounded part F_alpha. Once both magnitudes
// are capped, the growth obstruction disappears and the linear bound
// phi_g <= k phi_f is automatic on every polyhedral cell whose phi_f zero
// set lies inside the phi_g zero set (the joint image {(phi_g, phi_f)} of a
// cell is a polyhedron with bounded first coordinate meeting {v = 0} only at
// u = 0, so sup u/v is finite over its vertices and rays). Membership
// between capped generators therefore reduces to skeleton containment, for
// every positive alpha alike; this is the order correspondence between
// kernels modulo F and their skeletons, and it is cross-validated against
// the definitional member() computation in the test suite.
inline bool equiv_mod_F(const RationalExpr& f, const RationalExpr& g,
                        const Scalar& alpha = t(1), int budget = kDefaultBudget) {
    if (alpha.magnitude <= 0) throw DomainError("equiv_mod_F: alpha must have magnitude > 0");
    return complex_equal(skel_complex(f, budget), skel_complex(g, budget));
}

// ---- structural predicates -----------------------------------------------------------

// Every corner of underline(f) lies on Skel(f). Requires a tangible
// denominator, since Corn of a ghost-coefficient polynomial mixes in the
// denominator's own ghost locus.
inline bool corner_internal(const RationalExpr& f, int budget = kDefaultBudget) {
    if (!is_tangible(f.den)) throw GhostDenominatorError("corner_internal: ghost denominator");
    CellComplex corn = corn_complex(underline(f), budget);
    CellComplex skel = skel_complex(f, budget);
    return complex_contains(skel, corn);
}

// f is regular when no numerator functional coincides with a denominator
// functional on a full-dimensional joint dominance region (where the value
// would be identically nu-one on a fat set).
inline bool regular(const RationalExpr& f, int budget = kDefaultBudget) {
    check_budget(f.num, budget);
    check_budget(f.den, budget);
    int n = f.n();
    std::vector<Aff> H = detail::affines_of(f.num), G = detail::affines_of(f.den);
    for (size_t i = 0; i < H.size(); ++i)
        for (size_t j = 0; j < G.size(); ++j) {
            if (H[i] != G[j]) continue;
            Cell c;
            for (size_t l = 0; l < H.size(); ++l)
                if (l != i) c.ge.push_back(aff_sub(H[i], H[l]));
            for (size_t m = 0; m < G.size(); ++m)
                if (m != j) c.ge.push_back(aff_sub(G[j], G[m]));
            if (cell_dimension(n, c) == n) return false;
        }
    return true;
}

// K(f) and K(g) intersect in the trivial kernel: their skeletons cover Q^n.
inline bool orthogonal(const RationalExpr& f, const RationalExpr& g,
                       int budget = kDefaultBudget) {
    return covers_all(complex_union(skel_complex(f, budget), skel_complex(g, budget)));
}

// g lies in the double polar of <f>: Skel(g) contains Skel(f).
inline bool in_double_polar(const RationalExpr& g, const RationalExpr& f,
                            int budget = kDefaultBudget) {
    return complex_contains(skel_complex(g, budget), skel_complex(f, budget));
}

}  // namespace sktrop
