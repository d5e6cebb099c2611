/*
 * decompose.hpp
 * -------------
 * HO-decomposition of a principal kernel into HS x Region and
 * BoundedBelow x Region components, the wedge decomposition of its
 * generator, and the kernel classifier.
 *
 * A full-dimensional dominance pattern is a pair (i, j): numerator monomial
 * i and denominator monomial j strictly dominate somewhere. The pattern's
 * component carries the hyperspace relation num_i/den_j = 1 and the order
 * relations 1 + num_h/num_i = 1, 1 + den_g/den_j = 1. Lower-dimensional
 * patterns are recovered by intersecting the skeleton pieces of the emitted
 * components to a fixpoint. Components are identified and ordered by a
 * canonical signature (kind, RREF of the relation equations, primitive
 * region halfspaces).
 */
#pragma once

#include "kernel.hpp"

namespace sktrop {

enum class HOKind { hs_region, bounded_region };

struct HOComponent {
    HOKind kind = HOKind::hs_region;
    std::vector<Monomial> hs;      // nonconstant Laurent ratios h'/g'
    std::vector<Monomial> region;  // the m of each order fraction t(0)+m
    RationalExpr generator;        // sum of the norms of all relations
    std::optional<Cell> skeleton_piece;  // canonical; absent for bounded kind
    std::string signature;
    bool full_pattern = true;  // false for recovered lower-dimensional patterns
};

namespace detail {

inline Monomial mono_ratio(const Monomial& a, const Monomial& b) {
    Monomial r{t(a.coeff.magnitude - b.coeff.magnitude), a.exps};
    for (size_t v = 0; v < r.exps.size(); ++v) r.exps[v] -= b.exps[v];
    return r;
}

inline bool mono_constant(const Monomial& m) {
    for (long long e : m.exps)
        if (e != 0) return false;
    return true;
}

inline RationalExpr mono_expr(int n, const Monomial& m, int budget) {
    return make_expr(make_poly(n, {m}), constant_poly(n, t(0)), budget);
}

// The order fraction t(0) + m.
inline RationalExpr order_fraction(int n, const Monomial& m, int budget) {
    return make_expr(make_poly(n, {Monomial{t(0), std::vector<long long>(n, 0)}, m}),
                     constant_poly(n, t(0)), budget);
}

inline std::string signature_of(HOKind kind, const std::vector<Aff>& ties,
                                const std::vector<Aff>& halfspaces) {
    RatMat rows;
    for (const Aff& a : ties) {
        RatVec r = a.g;
        r.push_back(a.c);
        rows.push_back(std::move(r));
    }
    rref(rows);
    std::vector<Aff> hs;
    for (const Aff& a : halfspaces) {
        Aff p = primitive(a, false);
        bool dup = false;
        for (const Aff& q : hs)
            if (q == p) dup = true;
        if (!dup) hs.push_back(std::move(p));
    }
    std::sort(hs.begin(), hs.end(), aff_less);

    std::string s = kind == HOKind::hs_region ? "H" : "B";
    for (const RatVec& r : rows) {
        s += '[';
        for (const Rat& x : r) s += rat_to_string(x) + ',';
        s += ']';
    }
    s += '|';
    for (const Aff& a : hs) {
        s += '[' + rat_to_string(a.c);
        for (const Rat& x : a.g) s += ',' + rat_to_string(x);
        s += ']';
    }
    return s;
}

// Assemble the component of dominance pattern (H, G); H and G are sorted
// index sets into f.num / f.den whose functionals coincide on the pattern's
// locus.
inline HOComponent build_component(const RationalExpr& f, const std::vector<int>& H,
                                   const std::vector<int>& G, int budget) {
    int n = f.n();
    std::vector<Aff> NA = affines_of(f.num), DA = affines_of(f.den);
    HOComponent comp;

    std::vector<Monomial> ratios;  // all h'/g' pairs, constants included
    std::vector<Aff> ties;
    bool nonunit_constant = false;
    for (int h : H)
        for (int g : G) {
            Monomial r = mono_ratio(f.num.ms[h], f.den.ms[g]);
            if (mono_constant(r)) {
                if (r.coeff.magnitude == 0) continue;  // trivial relation
                nonunit_constant = true;
            }
            bool dup = false;
            for (const Monomial& q : ratios)
                if (q == r) dup = true;
            if (dup) continue;
            ratios.push_back(r);
            ties.push_back(aff_sub(NA[h], DA[g]));
        }

    std::vector<Aff> halfspaces;  // >= 0 on the pattern locus
    int h0 = H.front(), g0 = G.front();
    for (size_t h = 0; h < NA.size(); ++h) {
        if (std::find(H.begin(), H.end(), static_cast<int>(h)) != H.end()) continue;
        comp.region.push_back(mono_ratio(f.num.ms[h], f.num.ms[h0]));
        halfspaces.push_back(aff_sub(NA[h0], NA[h]));
    }
    for (size_t g = 0; g < DA.size(); ++g) {
        if (std::find(G.begin(), G.end(), static_cast<int>(g)) != G.end()) continue;
        comp.region.push_back(mono_ratio(f.den.ms[g], f.den.ms[g0]));
        halfspaces.push_back(aff_sub(DA[g0], DA[g]));
    }

    std::optional<Cell> piece;
    if (!nonunit_constant) {
        Cell raw{ties, halfspaces, {}};
        piece = canonicalize_cell(n, raw);
    }
    comp.kind = piece ? HOKind::hs_region : HOKind::bounded_region;
    comp.skeleton_piece = std::move(piece);
    for (const Monomial& r : ratios)
        if (!mono_constant(r)) comp.hs.push_back(r);

    std::optional<RationalExpr> gen;
    auto add_term = [&](const RationalExpr& e) {
        RationalExpr t = re_norm(e, budget);
        gen = gen ? re_add(*gen, t, budget) : t;
    };
    for (const Monomial& r : ratios) add_term(mono_expr(n, r, budget));
    for (const Monomial& m : comp.region) add_term(order_fraction(n, m, budget));
    comp.generator = gen ? *gen : const_expr(n, t(0));

    comp.signature = signature_of(comp.kind, ties, halfspaces);
    return comp;
}

}  // namespace detail

// All HO components of <f>: one per full-dimensional dominance pattern plus
// the lower-dimensional patterns recovered from intersections of skeleton
// pieces. Sorted by signature.
inline std::vector<HOComponent> ho_decompose(const RationalExpr& f, int budget = kDefaultBudget) {
    if (!is_tangible(f.den)) throw GhostDenominatorError("ho_decompose: ghost denominator");
    check_budget(f.num, budget);
    check_budget(f.den, budget);
    int n = f.n();
    std::vector<Aff> NA = detail::affines_of(f.num), DA = detail::affines_of(f.den);

    std::vector<HOComponent> comps;
    auto seen = [&](const std::string& sig) {
        for (const HOComponent& c : comps)
            if (c.signature == sig) return true;
        return false;
    };

    // full-dimensional patterns: strict dominance of (i, j)
    for (size_t i = 0; i < NA.size(); ++i)
        for (size_t j = 0; j < DA.size(); ++j) {
            std::vector<LinCon> cons;
            for (size_t l = 0; l < NA.size(); ++l)
                if (l != i) cons.push_back({aff_sub(NA[i], NA[l]), Rel::gt});
            for (size_t m = 0; m < DA.size(); ++m)
                if (m != j) cons.push_back({aff_sub(DA[j], DA[m]), Rel::gt});
            if (!lp_point(n, cons)) continue;
            HOComponent c = detail::build_component(f, {static_cast<int>(i)},
                                                    {static_cast<int>(j)}, budget);
            if (!seen(c.signature)) comps.push_back(std::move(c));
        }

    // lower-dimensional recovery: intersect skeleton pieces to a fixpoint
    std::vector<Cell> pieces;
    for (const HOComponent& c : comps)
        if (c.skeleton_piece) pieces.push_back(*c.skeleton_piece);
    std::vector<std::string> piece_keys;
    for (const Cell& p : pieces) piece_keys.push_back(cell_key(p));

    for (size_t a = 0; a < pieces.size(); ++a)
        for (size_t b = 0; b < a; ++b) {
            Cell raw;
            raw.eq = pieces[a].eq;
            raw.eq.insert(raw.eq.end(), pieces[b].eq.begin(), pieces[b].eq.end());
            raw.ge = pieces[a].ge;
            raw.ge.insert(raw.ge.end(), pieces[b].ge.begin(), pieces[b].ge.end());
            std::optional<Cell> face = canonicalize_cell(n, raw);
            if (!face) continue;
            std::string key = cell_key(*face);
            if (std::find(piece_keys.begin(), piece_keys.end(), key) != piece_keys.end())
                continue;
            std::vector<Rat> w = cell_rel_interior_point(n, *face);
            HOComponent c = detail::build_component(f, detail::dominators(w, NA),
                                                    detail::dominators(w, DA), budget);
            c.full_pattern = false;
            if (!seen(c.signature)) comps.push_back(std::move(c));
            pieces.push_back(std::move(*face));
            piece_keys.push_back(std::move(key));
        }

    std::sort(comps.begin(), comps.end(),
              [](const HOComponent& x, const HOComponent& y) { return x.signature < y.signature; });
    return comps;
}

// Wedge terms u_i with |f| = /\ u_i pointwise (nu): one per full-dimensional
// skeleton-meeting pattern, u_i = |f| + sum of the component's relation
// norms (order-fraction norms when the hs part is empty).
inline std::vector<RationalExpr> wedge_decompose(const RationalExpr& f,
                                                 int budget = kDefaultBudget) {
    RationalExpr nf = re_norm(f, budget);
    std::vector<RationalExpr> out;
    int n = f.n();
    for (const HOComponent& c : ho_decompose(f, budget)) {
        if (c.kind != HOKind::hs_region || !c.full_pattern) continue;
        RationalExpr u = nf;
        if (!c.hs.empty()) {
            for (const Monomial& r : c.hs)
                u = re_add(u, re_norm(detail::mono_expr(n, r, budget), budget), budget);
        } else {
            for (const Monomial& m : c.region)
                u = re_add(u, re_norm(detail::order_fraction(n, m, budget), budget), budget);
        }
        out.push_back(std::move(u));
    }
    if (out.empty()) out.push_back(std::move(nf));
    return out;
}

// Does the decomposition reassemble: the intersection of the component
// kernels agrees with <f> modulo the bounded part <F>. By the order
// correspondence between kernels modulo F and skeletons (see equiv_mod_F),
// this holds exactly when the union of the component generators' skeletons
// is Skel(f); the skeletons are recomputed from the generator expressions,
// independently of the stored skeleton pieces.
inline bool reassembles(const RationalExpr& f, const std::vector<HOComponent>& comps,
                        int budget = kDefaultBudget) {
    CellComplex u{f.n(), {}};
    for (const HOComponent& c : comps)
        u = complex_union(u, skel_complex(c.generator, budget));
    return complex_equal(u, skel_complex(f, budget));
}

// ---- classification -----------------------------------------------------------

enum class Kind { hp, hs, order, region, ho, bounded_below, general };

inline std::string kind_name(Kind k) {
    switch (k) {
        case Kind::hp: return "HP";
        case Kind::hs: return "HS";
        case Kind::order: return "order";
        case Kind::region: return "region";
        case Kind::ho: return "HO";
        case Kind::bounded_below: return "bounded-below";
        default: return "general";
    }
}

namespace detail {

// The Laurent monomial with F_m = c + g.x, for integer-primitive (c, g).
inline Monomial mono_of_functional(const Rat& c, const RatVec& g) {
    Monomial m{t(c), {}};
    for (const Rat& x : g) m.exps.push_back(numerator(x).convert_to<long long>());
    return m;
}

// Laurent monomials whose norms cut out the affine set given by the
// canonical equalities of a cell.
inline std::vector<Monomial> hs_monomials_of(const Cell& c) {
    std::vector<Monomial> out;
    for (const Aff& e : c.eq) out.push_back(mono_of_functional(e.c, e.g));
    return out;
}

// Order-fraction monomials for the canonical inequalities: phi >= 0 becomes
// t(0) + m with F_m = -phi.
inline std::vector<Monomial> order_monomials_of(const Cell& c) {
    std::vector<Monomial> out;
    for (const Aff& ge : c.ge) {
        RatVec neg = ge.g;
        for (Rat& x : neg) x = -x;
        out.push_back(mono_of_functional(-ge.c, neg));
    }
    return out;
}

}  // namespace detail

inline Kind classify(const RationalExpr& f, int budget = kDefaultBudget) {
    int n = f.n();
    if (f.num.ms.size() == 1 && f.den.ms.size() == 1) {
        Monomial r = detail::mono_ratio(f.num.ms[0], f.den.ms[0]);
        if (!detail::mono_constant(r)) return Kind::hp;
        return r.coeff.magnitude == 0 ? Kind::region : Kind::bounded_below;
    }
    CellComplex skel = skel_complex(f, budget);
    if (skel.empty()) return Kind::bounded_below;
    if (covers_all(skel)) return Kind::region;
    if (skel.cells.size() == 1) {
        const Cell& c = skel.cells[0];
        std::optional<RationalExpr> hs_gen, region_gen;
        if (!c.eq.empty()) {
            for (const Monomial& m : detail::hs_monomials_of(c)) {
                RationalExpr t = re_norm(detail::mono_expr(n, m, budget), budget);
                hs_gen = hs_gen ? re_add(*hs_gen, t, budget) : t;
            }
        }
        if (!c.ge.empty()) {
            for (const Monomial& m : detail::order_monomials_of(c)) {
                RationalExpr t = re_norm(detail::order_fraction(n, m, budget), budget);
                region_gen = region_gen ? re_mul(*region_gen, t, budget) : t;
            }
        }
        if (hs_gen && !region_gen) {
            if (kernel_equal(f, *hs_gen, budget))
                return c.eq.size() == 1 ? Kind::hp : Kind::hs;
        } else if (region_gen && !hs_gen) {
            if (kernel_equal(f, *region_gen, budget))
                return c.ge.size() == 1 ? Kind::order : Kind::region;
        } else if (hs_gen && region_gen) {
            if (kernel_equal(f, re_mul(*hs_gen, *region_gen, budget), budget)) return Kind::ho;
        }
    }
    return Kind::general;
}

}  // namespace sktrop
