/*
 * complex.hpp
 * -----------
 * Exact polyhedral geometry: labeled rational cells and cell complexes,
 * the Corn/Skel constructions, set operations decided by LP, and the
 * hyperplane-arrangement refinement used by the kernel calculus.
 *
 * Cells are closed convex rational polyhedra given by affine equalities and
 * inequalities. Every cell stored in a complex is canonicalized: nonempty,
 * implicit equalities promoted and reduced to RREF, inequalities reduced
 * modulo the affine hull, made primitive-integer, deduplicated and
 * irredundant, and sorted — so structural equality of canonical cells is
 * set equality.
 */
#pragma once

#include <json.hpp>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "expr.hpp"
#include "linalg.hpp"
#include "lp.hpp"

namespace sktrop {

struct Label {
    std::vector<int> H, G;
    bool operator==(const Label&) const = default;
};

struct Cell {
    std::vector<Aff> eq;  // = 0
    std::vector<Aff> ge;  // >= 0
    Label label;
    bool operator==(const Cell&) const = default;
};

struct CellComplex {
    int n = 0;
    std::vector<Cell> cells;
    bool empty() const { return cells.empty(); }
};

// Closed cell plus strict constraints; the working object of containment
// recursions (never stored in complexes).
struct CellS {
    std::vector<Aff> eq, ge, gt;
};

// ---- basic LP wrappers ------------------------------------------------------

inline std::vector<LinCon> constraints_of(const Cell& c) {
    std::vector<LinCon> cons;
    cons.reserve(c.eq.size() + c.ge.size());
    for (const Aff& f : c.eq) cons.push_back({f, Rel::eq});
    for (const Aff& f : c.ge) cons.push_back({f, Rel::ge});
    return cons;
}

inline std::vector<LinCon> constraints_of(const CellS& c) {
    std::vector<LinCon> cons;
    for (const Aff& f : c.eq) cons.push_back({f, Rel::eq});
    for (const Aff& f : c.ge) cons.push_back({f, Rel::ge});
    for (const Aff& f : c.gt) cons.push_back({f, Rel::gt});
    return cons;
}

inline bool feasible(int n, const CellS& c) { return lp_point(n, constraints_of(c)).has_value(); }
inline bool feasible(int n, const Cell& c) { return lp_point(n, constraints_of(c)).has_value(); }

inline std::optional<std::vector<Rat>> cell_point(int n, const Cell& c) {
    return lp_point(n, constraints_of(c));
}

// Relative-interior point of a *canonical* cell (implicit equalities already
// promoted, so all inequalities can be made strict simultaneously).
inline std::vector<Rat> cell_rel_interior_point(int n, const Cell& c) {
    std::vector<LinCon> cons;
    for (const Aff& f : c.eq) cons.push_back({f, Rel::eq});
    for (const Aff& f : c.ge) cons.push_back({f, Rel::gt});
    return *lp_point(n, cons);
}

inline LpResult cell_max(int n, const Cell& c, const Aff& f) {
    return lp_maximize(n, constraints_of(c), f);
}
inline LpResult cell_min(int n, const Cell& c, const Aff& f) {
    return lp_minimize(n, constraints_of(c), f);
}

// Does f vanish identically on the (nonempty) cell?
inline bool vanishes_on(int n, const Cell& c, const Aff& f) {
    LpResult mx = cell_max(n, c, f);
    if (mx.status != LpStatus::optimal || mx.value != 0) return false;
    LpResult mn = cell_min(n, c, f);
    return mn.status == LpStatus::optimal && mn.value == 0;
}

// ---- affine functional helpers ----------------------------------------------

inline Aff aff_sub(const Aff& a, const Aff& b) {
    Aff d{a.c - b.c, a.g};
    for (size_t i = 0; i < d.g.size(); ++i) d.g[i] -= b.g[i];
    return d;
}

inline Aff aff_neg(const Aff& a) {
    Aff d{-a.c, a.g};
    for (Rat& x : d.g) x = -x;
    return d;
}

// Scale to coprime integers; optionally force a canonical sign (first nonzero
// of (g..., c) positive) for orientation-free functionals.
inline Aff primitive(Aff a, bool canonical_sign) {
    Int l = 1;
    auto lcm_in = [&](const Rat& r) { l = boost::multiprecision::lcm(l, Int(denominator(r))); };
    lcm_in(a.c);
    for (const Rat& x : a.g) lcm_in(x);
    Int g = 0;
    auto gcd_in = [&](Rat& r) {
        r *= l;
        g = boost::multiprecision::gcd(g, Int(abs(numerator(r))));
    };
    gcd_in(a.c);
    for (Rat& x : a.g) gcd_in(x);
    if (g == 0) return a;  // zero functional
    for (Rat& x : a.g) x /= g;
    a.c /= g;
    if (canonical_sign) {
        int sgn = 0;
        for (const Rat& x : a.g)
            if (x != 0) { sgn = x > 0 ? 1 : -1; break; }
        if (sgn == 0) sgn = a.c >= 0 ? 1 : -1;
        if (sgn < 0) {
            for (Rat& x : a.g) x = -x;
            a.c = -a.c;
        }
    }
    return a;
}

inline bool aff_less(const Aff& a, const Aff& b) {
    if (a.g != b.g) return a.g < b.g;
    return a.c < b.c;
}

// ---- canonicalization --------------------------------------------------------

// Canonical form of a cell, or nullopt when empty.
inline std::optional<Cell> canonicalize_cell(int n, const Cell& raw) {
    if (!feasible(n, raw)) return std::nullopt;

    // implicit equalities among the inequalities
    std::vector<Aff> eqs = raw.eq, ges;
    for (const Aff& f : raw.ge) {
        LpResult mx = cell_max(n, raw, f);
        if (mx.status == LpStatus::optimal && mx.value == 0)
            eqs.push_back(f);
        else
            ges.push_back(f);
    }

    // affine hull in RREF over rows (g..., c)
    RatMat rows;
    for (const Aff& f : eqs) {
        RatVec r = f.g;
        r.push_back(f.c);
        rows.push_back(std::move(r));
    }
    std::vector<size_t> pivots = rref(rows);

    Cell out;
    out.label = raw.label;
    for (const RatVec& r : rows) {
        Aff f{r[n], RatVec(r.begin(), r.begin() + n)};
        out.eq.push_back(primitive(std::move(f), true));
    }

    // inequalities reduced modulo the hull, primitive, deduplicated
    for (const Aff& f : ges) {
        RatVec v = f.g;
        v.push_back(f.c);
        v = reduce_mod(rows, pivots, std::move(v));
        Aff r{v[n], RatVec(v.begin(), v.begin() + n)};
        bool zero_grad = true;
        for (const Rat& x : r.g)
            if (x != 0) zero_grad = false;
        if (zero_grad) continue;  // tautology on the hull (cell is feasible)
        r = primitive(std::move(r), false);
        bool dup = false;
        for (const Aff& h : out.ge)
            if (h == r) dup = true;
        if (!dup) out.ge.push_back(std::move(r));
    }

    // drop redundant inequalities (unique facet description within the hull)
    for (size_t i = 0; i < out.ge.size();) {
        Cell probe;
        probe.eq = out.eq;
        for (size_t j = 0; j < out.ge.size(); ++j)
            if (j != i) probe.ge.push_back(out.ge[j]);
        LpResult mn = cell_min(n, probe, out.ge[i]);
        if (mn.status == LpStatus::optimal && mn.value >= 0)
            out.ge.erase(out.ge.begin() + i);
        else
            ++i;
    }

    std::sort(out.eq.begin(), out.eq.end(), aff_less);
    std::sort(out.ge.begin(), out.ge.end(), aff_less);
    return out;
}

// Affine dimension; assumes the cell is canonical and nonempty.
inline int canonical_cell_dimension(int n, const Cell& c) {
    RatMat rows;
    for (const Aff& f : c.eq) rows.push_back(f.g);
    return n - static_cast<int>(rank(std::move(rows)));
}

// Affine dimension of an arbitrary cell, or nullopt when empty.
inline std::optional<int> cell_dimension(int n, const Cell& c) {
    std::optional<Cell> canon = canonicalize_cell(n, c);
    if (!canon) return std::nullopt;
    return canonical_cell_dimension(n, *canon);
}

inline std::string cell_key(const Cell& c) {
    std::string k;
    auto put = [&k](const std::vector<Aff>& fs, char tag) {
        k += tag;
        for (const Aff& f : fs) {
            k += '[' + rat_to_string(f.c);
            for (const Rat& x : f.g) k += ',' + rat_to_string(x);
            k += ']';
        }
    };
    put(c.eq, 'E');
    put(c.ge, 'G');
    return k;
}

// Is canonical cell a a subset of canonical cell b? (single-cell test)
inline bool cell_subset_single(int n, const Cell& a, const Cell& b) {
    for (const Aff& f : b.eq)
        if (!vanishes_on(n, a, f)) return false;
    for (const Aff& f : b.ge) {
        LpResult mn = cell_min(n, a, f);
        if (mn.status != LpStatus::optimal || mn.value < 0) return false;
    }
    return true;
}

// Canonicalize, drop empties and cells absorbed by a single other cell,
// deduplicate, sort by key.
inline CellComplex make_complex(int n, const std::vector<Cell>& raw) {
    std::vector<Cell> cells;
    for (const Cell& c : raw) {
        std::optional<Cell> canon = canonicalize_cell(n, c);
        if (!canon) continue;
        bool dup = false;
        for (const Cell& d : cells)
            if (d.eq == canon->eq && d.ge == canon->ge) dup = true;
        if (!dup) cells.push_back(std::move(*canon));
    }
    // absorption: drop any cell contained in a single other cell
    for (size_t i = 0; i < cells.size();) {
        bool absorbed = false;
        for (size_t j = 0; j < cells.size() && !absorbed; ++j) {
            if (i == j) continue;
            if (cell_subset_single(n, cells[i], cells[j])) {
                // mutual containment cannot happen for distinct canonical cells
                absorbed = true;
            }
        }
        if (absorbed)
            cells.erase(cells.begin() + i);
        else
            ++i;
    }
    std::sort(cells.begin(), cells.end(),
              [](const Cell& a, const Cell& b) { return cell_key(a) < cell_key(b); });
    return {n, std::move(cells)};
}

// ---- containment of a cell in a union of cells --------------------------------

// Is P (with strict bookkeeping) covered by the union of the closed cells?
// Splits P along the first cover cell's constraints with strict complements.
inline bool covered(int n, CellS P, const Cell* cover, size_t count) {
    if (!feasible(n, P)) return true;
    if (count == 0) return false;
    const Cell& D = *cover;
    std::vector<Aff> halfspaces;
    for (const Aff& f : D.eq) {
        halfspaces.push_back(f);
        halfspaces.push_back(aff_neg(f));
    }
    for (const Aff& f : D.ge) halfspaces.push_back(f);
    for (const Aff& f : halfspaces) {
        CellS B = P;
        B.gt.push_back(aff_neg(f));  // the part strictly outside D
        if (!covered(n, std::move(B), cover + 1, count - 1)) return false;
        P.ge.push_back(f);
    }
    return true;  // P is now inside D
}

inline CellS to_cells(const Cell& c) { return {c.eq, c.ge, {}}; }

inline bool complex_contains(const CellComplex& a, const CellComplex& b) {
    for (const Cell& c : b.cells)
        if (!covered(a.n, to_cells(c), a.cells.data(), a.cells.size())) return false;
    return true;
}

inline bool complex_equal(const CellComplex& a, const CellComplex& b) {
    return complex_contains(a, b) && complex_contains(b, a);
}

inline bool covers_all(const CellComplex& a) {
    return covered(a.n, CellS{}, a.cells.data(), a.cells.size());
}

inline CellComplex complex_union(const CellComplex& a, const CellComplex& b) {
    std::vector<Cell> cells = a.cells;
    cells.insert(cells.end(), b.cells.begin(), b.cells.end());
    return make_complex(a.n, cells);
}

inline CellComplex complex_intersection(const CellComplex& a, const CellComplex& b) {
    std::vector<Cell> cells;
    for (const Cell& c : a.cells)
        for (const Cell& d : b.cells) {
            Cell e;
            e.eq = c.eq;
            e.eq.insert(e.eq.end(), d.eq.begin(), d.eq.end());
            e.ge = c.ge;
            e.ge.insert(e.ge.end(), d.ge.begin(), d.ge.end());
            cells.push_back(std::move(e));
        }
    return make_complex(a.n, cells);
}

// Maximal cell dimension, or nullopt for the empty complex.
inline std::optional<int> set_dimension(const CellComplex& a) {
    std::optional<int> best;
    for (const Cell& c : a.cells) {
        int d = canonical_cell_dimension(a.n, c);
        if (!best || d > *best) best = d;
    }
    return best;
}

// ---- Corn and Skel -------------------------------------------------------------

namespace detail {

// Indices attaining the maximum of the affs at a relative-interior witness
// point of a cell. An affine functional dominated on a convex set and tying
// the dominant one at a relative-interior point coincides with it on the
// whole set, so this is exactly "dominating throughout the cell".
inline std::vector<int> dominators(const std::vector<Rat>& witness, const std::vector<Aff>& affs) {
    Rat best = affs[0].at(witness);
    for (size_t k = 1; k < affs.size(); ++k) best = std::max(best, affs[k].at(witness));
    std::vector<int> out;
    for (size_t k = 0; k < affs.size(); ++k)
        if (affs[k].at(witness) == best) out.push_back(static_cast<int>(k));
    return out;
}

}  // namespace detail

// Exact ghost-value locus {x : f(x) is ghost}: ties of two distinct monomials
// for the max, plus dominance regions of ghost-coefficient monomials.
inline CellComplex corn_complex(const Polynomial& f, int budget = kDefaultBudget) {
    Polynomial p = essential_prune(f);
    check_budget(p, budget);
    int n = p.n;
    std::vector<Aff> affs;
    for (const Monomial& m : p.ms) affs.push_back(to_affine(m));

    std::vector<Cell> raw;
    auto dominance_ges = [&](size_t i, size_t skip) {
        std::vector<Aff> ges;
        for (size_t l = 0; l < affs.size(); ++l)
            if (l != i && l != skip) ges.push_back(aff_sub(affs[i], affs[l]));
        return ges;
    };
    for (size_t i = 0; i < affs.size(); ++i)
        for (size_t j = i + 1; j < affs.size(); ++j) {
            Cell c;
            c.eq.push_back(aff_sub(affs[i], affs[j]));
            c.ge = dominance_ges(i, j);
            raw.push_back(std::move(c));
        }
    for (size_t i = 0; i < affs.size(); ++i) {
        if (p.ms[i].coeff.tangible()) continue;
        Cell c;
        c.ge = dominance_ges(i, i);
        raw.push_back(std::move(c));
    }
    CellComplex out = make_complex(n, raw);
    for (Cell& c : out.cells) {
        std::vector<Rat> w = cell_rel_interior_point(n, c);
        c.label.H = detail::dominators(w, affs);
        c.label.G.clear();
    }
    return out;
}

// Exact 1nu-set {x : |value| magnitude = 0} of a fraction, labeled with the
// numerator/denominator monomials dominating throughout each cell.
inline CellComplex skel_complex(const RationalExpr& f, int budget = kDefaultBudget) {
    check_budget(f.num, budget);
    check_budget(f.den, budget);
    int n = f.n();
    std::vector<Aff> H, G;
    for (const Monomial& m : f.num.ms) H.push_back(to_affine(m));
    for (const Monomial& m : f.den.ms) G.push_back(to_affine(m));

    std::vector<Cell> raw;
    for (size_t i = 0; i < H.size(); ++i)
        for (size_t j = 0; j < G.size(); ++j) {
            Cell c;
            c.eq.push_back(aff_sub(H[i], G[j]));
            for (size_t l = 0; l < H.size(); ++l)
                if (l != i) c.ge.push_back(aff_sub(H[i], H[l]));
            for (size_t m = 0; m < G.size(); ++m)
                if (m != j) c.ge.push_back(aff_sub(G[j], G[m]));
            raw.push_back(std::move(c));
        }
    CellComplex out = make_complex(n, raw);
    for (Cell& c : out.cells) {
        std::vector<Rat> w = cell_rel_interior_point(n, c);
        c.label.H = detail::dominators(w, H);
        c.label.G = detail::dominators(w, G);
    }
    return out;
}

// ---- arrangement refinement ------------------------------------------------------

struct RefCell {
    Cell cell;                  // full-dimensional, closed
    std::vector<Rat> interior;  // a point strictly off every arrangement hyperplane
};

// Full-dimensional cells of the hyperplane arrangement {h = 0 : h in hyps}.
inline std::vector<RefCell> arrangement(int n, const std::vector<Aff>& hyps) {
    // deduplicate up to scaling/sign, drop non-cutting functionals
    std::vector<Aff> planes;
    for (const Aff& h : hyps) {
        Aff p = primitive(h, true);
        bool zero_grad = true;
        for (const Rat& x : p.g)
            if (x != 0) zero_grad = false;
        if (zero_grad) continue;
        bool dup = false;
        for (const Aff& q : planes)
            if (q == p) dup = true;
        if (!dup) planes.push_back(std::move(p));
    }

    std::vector<std::vector<Aff>> cells{{}};  // ge lists
    for (const Aff& h : planes) {
        std::vector<std::vector<Aff>> next;
        for (std::vector<Aff>& ges : cells) {
            auto side = [&](const Aff& s) {
                CellS probe{{}, ges, {s}};
                return feasible(n, probe);
            };
            bool pos = side(h), neg = side(aff_neg(h));
            if (pos && neg) {
                std::vector<Aff> a = ges, b = std::move(ges);
                a.push_back(h);
                b.push_back(aff_neg(h));
                next.push_back(std::move(a));
                next.push_back(std::move(b));
            } else {
                next.push_back(std::move(ges));
            }
        }
        cells = std::move(next);
    }

    std::vector<RefCell> out;
    for (std::vector<Aff>& ges : cells) {
        CellS strict{{}, {}, ges};
        auto p = lp_point(n, constraints_of(strict));
        // full-dimensional by construction; a strict interior point exists
        out.push_back({Cell{{}, std::move(ges), {}}, std::move(*p)});
    }
    return out;
}

// ---- JSON -------------------------------------------------------------------------

inline nlohmann::ordered_json aff_to_json(const Aff& f) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    a.push_back(rat_to_string(f.c));
    for (const Rat& x : f.g) a.push_back(rat_to_string(x));
    return a;
}

inline nlohmann::ordered_json complex_to_json(const CellComplex& c) {
    nlohmann::ordered_json j;
    j["n"] = c.n;
    j["cells"] = nlohmann::ordered_json::array();
    for (const Cell& cell : c.cells) {
        nlohmann::ordered_json jc;
        jc["eq"] = nlohmann::ordered_json::array();
        for (const Aff& f : cell.eq) jc["eq"].push_back(aff_to_json(f));
        jc["ge"] = nlohmann::ordered_json::array();
        for (const Aff& f : cell.ge) jc["ge"].push_back(aff_to_json(f));
        jc["label"]["H"] = cell.label.H;
        jc["label"]["G"] = cell.label.G;
        j["cells"].push_back(std::move(jc));
    }
    return j;
}

inline Aff aff_from_json(const nlohmann::json& a, int n) {
    if (static_cast<int>(a.size()) != n + 1) throw DomainError("functional arity mismatch");
    Aff f{rat_from_string(a[0].get<std::string>()), {}};
    for (int i = 0; i < n; ++i) f.g.push_back(rat_from_string(a[i + 1].get<std::string>()));
    return f;
}

inline CellComplex complex_from_json(const nlohmann::json& j) {
    CellComplex c;
    c.n = j.at("n").get<int>();
    for (const auto& jc : j.at("cells")) {
        Cell cell;
        for (const auto& a : jc.at("eq")) cell.eq.push_back(aff_from_json(a, c.n));
        for (const auto& a : jc.at("ge")) cell.ge.push_back(aff_from_json(a, c.n));
        if (jc.contains("label")) {
            cell.label.H = jc["label"].value("H", std::vector<int>{});
            cell.label.G = jc["label"].value("G", std::vector<int>{});
        }
        c.cells.push_back(std::move(cell));
    }
    return c;
}

}  // namespace sktrop
