/*
 * expr.hpp
 * --------
 * Laurent monomials, supertropical polynomials, and rational functions in
 * fraction normal form over the log-scale semifield of scalar.hpp.
 *
 * Fractions are never reduced to lowest terms; instead every operation
 * merges duplicate exponent vectors and prunes inessential monomials (the
 * function-semantics quotient). Essentiality is decided by exact LP.
 */
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "lp.hpp"
#include "scalar.hpp"

namespace sktrop {

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GhostDenominatorError : DomainError {
    using DomainError::DomainError;
};

struct Monomial {
    Scalar coeff;
    std::vector<long long> exps;

    bool operator==(const Monomial&) const = default;
};

// Log-scale linearization: magnitude of m at x is to_affine(m).at(x).
inline Aff to_affine(const Monomial& m) {
    Aff a{m.coeff.magnitude, {}};
    a.g.reserve(m.exps.size());
    for (long long e : m.exps) a.g.emplace_back(e);
    return a;
}

inline Scalar eval(const Monomial& m, const std::vector<Scalar>& x) {
    Scalar v = m.coeff;
    for (size_t i = 0; i < m.exps.size(); ++i) v = mul(v, pow(x[i], m.exps[i]));
    return v;
}

struct Polynomial {
    int n = 0;
    std::vector<Monomial> ms;  // nonempty, distinct exponent vectors, sorted

    bool operator==(const Polynomial&) const = default;
};

// Merge duplicate exponent vectors by scalar add and sort for determinism.
inline Polynomial make_poly(int n, std::vector<Monomial> ms) {
    std::map<std::vector<long long>, Scalar> acc;
    for (Monomial& m : ms) {
        if (static_cast<int>(m.exps.size()) != n) throw DomainError("monomial arity mismatch");
        auto [it, fresh] = acc.emplace(m.exps, m.coeff);
        if (!fresh) it->second = add(it->second, m.coeff);
    }
    if (acc.empty()) throw DomainError("empty polynomial");
    Polynomial p{n, {}};
    p.ms.reserve(acc.size());
    for (auto& [e, c] : acc) p.ms.push_back({c, e});
    return p;
}

inline Polynomial constant_poly(int n, const Scalar& c) {
    return make_poly(n, {{c, std::vector<long long>(n, 0)}});
}

inline Scalar eval(const Polynomial& p, const std::vector<Scalar>& x) {
    Scalar v = eval(p.ms[0], x);
    for (size_t i = 1; i < p.ms.size(); ++i) v = add(v, eval(p.ms[i], x));
    return v;
}

inline bool is_tangible(const Polynomial& p) {
    return std::all_of(p.ms.begin(), p.ms.end(),
                       [](const Monomial& m) { return m.coeff.tangible(); });
}

inline Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    std::vector<Monomial> ms = a.ms;
    ms.insert(ms.end(), b.ms.begin(), b.ms.end());
    return make_poly(a.n, std::move(ms));
}

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    std::vector<Monomial> ms;
    ms.reserve(a.ms.size() * b.ms.size());
    for (const Monomial& u : a.ms)
        for (const Monomial& v : b.ms) {
            Monomial w{mul(u.coeff, v.coeff), u.exps};
            for (size_t i = 0; i < w.exps.size(); ++i) w.exps[i] += v.exps[i];
            ms.push_back(std::move(w));
        }
    return make_poly(a.n, std::move(ms));
}

inline Polynomial poly_pow(const Polynomial& a, int k) {
    if (k < 1) throw DomainError("poly_pow: exponent must be positive");
    Polynomial r = a;
    for (int i = 1; i < k; ++i) r = poly_mul(r, a);
    return r;
}

// ---- essential pruning ----------------------------------------------------

namespace detail {

inline bool region_nonempty(int n, const std::vector<LinCon>& cons) {
    return lp_point(n, cons).has_value();
}

// Is ms[i] essential within ms? (exponent vectors assumed distinct)
inline bool essential(int n, const std::vector<Monomial>& ms, size_t i) {
    if (ms.size() == 1) return true;
    Aff fi = to_affine(ms[i]);
    auto diff = [&](size_t l) {  // F_i - F_l
        Aff d = fi;
        Aff fl = to_affine(ms[l]);
        d.c -= fl.c;
        for (int j = 0; j < n; ++j) d.g[j] -= fl.g[j];
        return d;
    };
    // (a) strict dominance region nonempty
    {
        std::vector<LinCon> cons;
        for (size_t l = 0; l < ms.size(); ++l)
            if (l != i) cons.push_back({diff(l), Rel::gt});
        if (region_nonempty(n, cons)) return true;
    }
    // (b) a tie with exactly one tangible partner, all others strictly below
    for (size_t h = 0; h < ms.size(); ++h) {
        if (h == i || ms[h].coeff.ghost()) continue;
        std::vector<LinCon> cons;
        cons.push_back({diff(h), Rel::eq});
        for (size_t l = 0; l < ms.size(); ++l)
            if (l != i && l != h) cons.push_back({diff(l), Rel::gt});
        if (region_nonempty(n, cons)) return true;
    }
    return false;
}

}  // namespace detail

// Remove monomials whose deletion never changes the function value.
inline Polynomial essential_prune(const Polynomial& p) {
    std::vector<Monomial> ms = p.ms;
    bool changed = true;
    while (changed && ms.size() > 1) {
        changed = false;
        for (size_t i = 0; i < ms.size();) {
            if (!detail::essential(p.n, ms, i)) {
                ms.erase(ms.begin() + i);
                changed = true;
            } else {
                ++i;
            }
        }
    }
    return make_poly(p.n, std::move(ms));
}

// ---- rational expressions --------------------------------------------------

struct RationalExpr {
    Polynomial num, den;

    int n() const { return num.n; }
    bool operator==(const RationalExpr&) const = default;
};

inline void check_budget(const Polynomial& p, int budget) {
    if (static_cast<int>(p.ms.size()) > budget)
        throw BudgetError("monomial budget exceeded: " + std::to_string(p.ms.size()) + " > " +
                          std::to_string(budget));
}

inline constexpr int kDefaultBudget = 64;

inline RationalExpr make_expr(Polynomial num, Polynomial den, int budget = kDefaultBudget) {
    RationalExpr f{essential_prune(num), essential_prune(den)};
    check_budget(f.num, budget);
    check_budget(f.den, budget);
    // Canonical scaling: divide num and den by the largest common Laurent
    // monomial power, i.e. shift each variable's minimum exponent to zero.
    // A tangible monomial is a unit, so this is exactly function-preserving
    // and makes the normal form unique under common monomial factors.
    for (int j = 0; j < f.num.n; ++j) {
        long long mn = f.num.ms[0].exps[j];
        for (const Monomial& m : f.num.ms) mn = std::min(mn, m.exps[j]);
        for (const Monomial& m : f.den.ms) mn = std::min(mn, m.exps[j]);
        if (mn == 0) continue;
        for (Monomial& m : f.num.ms) m.exps[j] -= mn;
        for (Monomial& m : f.den.ms) m.exps[j] -= mn;
    }
    return f;
}

inline RationalExpr const_expr(int n, const Scalar& c, int budget = kDefaultBudget) {
    return make_expr(constant_poly(n, c), constant_poly(n, t(0)), budget);
}

inline RationalExpr var_expr(int n, int i, int budget = kDefaultBudget) {
    std::vector<long long> e(n, 0);
    e[i] = 1;
    return make_expr(make_poly(n, {{t(0), e}}), constant_poly(n, t(0)), budget);
}

inline Scalar evaluate(const RationalExpr& f, const std::vector<Scalar>& x) {
    return mul(eval(f.num, x), star(eval(f.den, x)));
}

inline RationalExpr re_star(const RationalExpr& f, int budget = kDefaultBudget) {
    return make_expr(f.den, f.num, budget);
}

inline RationalExpr re_add(const RationalExpr& f, const RationalExpr& g,
                           int budget = kDefaultBudget) {
    return make_expr(poly_add(poly_mul(f.num, g.den), poly_mul(g.num, f.den)),
                     poly_mul(f.den, g.den), budget);
}

inline RationalExpr re_mul(const RationalExpr& f, const RationalExpr& g,
                           int budget = kDefaultBudget) {
    return make_expr(poly_mul(f.num, g.num), poly_mul(f.den, g.den), budget);
}

// f ∧ g = fg(f+g)* = (h h') / (h g' + g h').
inline RationalExpr re_wedge(const RationalExpr& f, const RationalExpr& g,
                             int budget = kDefaultBudget) {
    return make_expr(poly_mul(f.num, g.num),
                     poly_add(poly_mul(f.num, g.den), poly_mul(f.den, g.num)), budget);
}

// |f| = (h^2 + g^2) / (g h).
inline RationalExpr re_norm(const RationalExpr& f, int budget = kDefaultBudget) {
    return make_expr(poly_add(poly_mul(f.num, f.num), poly_mul(f.den, f.den)),
                     poly_mul(f.num, f.den), budget);
}

inline RationalExpr re_pow(const RationalExpr& f, int k, int budget = kDefaultBudget) {
    if (k == 0) return const_expr(f.n(), t(0), budget);
    if (k < 0) return re_pow(re_star(f, budget), -k, budget);
    return make_expr(poly_pow(f.num, k), poly_pow(f.den, k), budget);
}

// ---- hat construction ------------------------------------------------------

// Sum of monomials omitting index i (f_(h_i)); requires >= 2 monomials.
inline Polynomial omit(const Polynomial& p, size_t i) {
    std::vector<Monomial> ms;
    for (size_t j = 0; j < p.ms.size(); ++j)
        if (j != i) ms.push_back(p.ms[j]);
    return make_poly(p.n, std::move(ms));
}

// f̂ = f^t (∏_i f_(h_i))*; degenerate single-monomial input gives constant 1.
inline RationalExpr hat(const Polynomial& f, int budget = kDefaultBudget) {
    Polynomial p = essential_prune(f);
    int tcount = static_cast<int>(p.ms.size());
    if (tcount == 1) return const_expr(p.n, t(0), budget);
    Polynomial den = omit(p, 0);
    for (int i = 1; i < tcount; ++i) den = poly_mul(den, omit(p, i));
    return make_expr(poly_pow(p, tcount), std::move(den), budget);
}

inline bool hat_degenerate(const Polynomial& f) { return essential_prune(f).ms.size() == 1; }

// Molecules f̂_i = h_i · f_(h_i)*; empty for the degenerate case.
inline std::vector<RationalExpr> molecules(const Polynomial& f, int budget = kDefaultBudget) {
    Polynomial p = essential_prune(f);
    std::vector<RationalExpr> out;
    if (p.ms.size() == 1) return out;
    for (size_t i = 0; i < p.ms.size(); ++i)
        out.push_back(make_expr(make_poly(p.n, {p.ms[i]}), omit(p, i), budget));
    return out;
}

// f̃ = ∧_i |f̂_i|. Single-monomial degenerate case: t(1) for a tangible
// monomial (empty skeleton — no corner locus) and g(0) for a ghost monomial
// (full skeleton — everything is a ghost root).
inline RationalExpr tilde(const Polynomial& f, int budget = kDefaultBudget) {
    Polynomial p = essential_prune(f);
    if (p.ms.size() == 1)
        return const_expr(p.n, p.ms[0].coeff.ghost() ? g(0) : t(1), budget);
    std::vector<RationalExpr> mols = molecules(p, budget);
    RationalExpr r = re_norm(mols[0], budget);
    for (size_t i = 1; i < mols.size(); ++i) r = re_wedge(r, re_norm(mols[i], budget), budget);
    return r;
}

// underline(f) = num + den as one pruned polynomial.
inline Polynomial underline(const RationalExpr& f) {
    return essential_prune(poly_add(f.num, f.den));
}

// Φ_CI(f) = |f| ∧ (|f* + 1| + h̃) ∧ (|f + 1| + g̃).
inline RationalExpr phi_ci(const RationalExpr& f, int budget = kDefaultBudget) {
    RationalExpr one = const_expr(f.n(), t(0), budget);
    RationalExpr htilde = tilde(f.num, budget);
    RationalExpr gtilde = tilde(f.den, budget);
    RationalExpr a = re_norm(f, budget);
    RationalExpr b = re_add(re_norm(re_add(re_star(f, budget), one, budget), budget), htilde, budget);
    RationalExpr c = re_add(re_norm(re_add(f, one, budget), budget), gtilde, budget);
    return re_wedge(re_wedge(a, b, budget), c, budget);
}

// ---- formatting (round-trips through parser.hpp) ----------------------------

inline std::string to_string(const Monomial& m) {
    std::string s = to_string(m.coeff);
    for (size_t i = 0; i < m.exps.size(); ++i) {
        if (m.exps[i] == 0) continue;
        s += "*x" + std::to_string(i + 1);
        if (m.exps[i] != 1) s += "^" + std::to_string(m.exps[i]);
    }
    return s;
}

inline std::string to_string(const Polynomial& p) {
    std::string s;
    for (size_t i = 0; i < p.ms.size(); ++i) {
        if (i) s += "+";
        s += to_string(p.ms[i]);
    }
    return s;
}

inline std::string to_string(const RationalExpr& f) {
    bool unit_den = f.den.ms.size() == 1 && f.den.ms[0] == Monomial{t(0), std::vector<long long>(f.n(), 0)};
    if (unit_den) return to_string(f.num);
    return "(" + to_string(f.num) + ")/(" + to_string(f.den) + ")";
}

}  // namespace sktrop
