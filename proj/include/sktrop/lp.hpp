/*
 * lp.hpp
 * ------
 * Exact linear programming over Q: a two-phase dictionary simplex with
 * Bland's rule and rational pivoting. Free variables are split as u - w.
 * Strict systems are decided by maximizing a slack t with each strict
 * constraint relaxed to ">= t" and t <= 1: strictly feasible iff t* > 0.
 *
 * Everything geometric in the library (cell emptiness, dimensions,
 * containment, dominance, membership bounds) reduces to these calls.
 */
#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace sktrop {

// Affine functional c + g.x on Q^n.
struct Aff {
    Rat c;
    std::vector<Rat> g;

    int n() const { return static_cast<int>(g.size()); }
    Rat at(const std::vector<Rat>& x) const {
        Rat v = c;
        for (size_t i = 0; i < g.size(); ++i) v += g[i] * x[i];
        return v;
    }
    bool is_zero() const {
        if (c != 0) return false;
        for (const Rat& gi : g) if (gi != 0) return false;
        return true;
    }
    bool operator==(const Aff&) const = default;
};

enum class Rel { eq, ge, gt };  // f = 0, f >= 0, f > 0

struct LinCon {
    Aff f;
    Rel rel;
};

enum class LpStatus { optimal, unbounded, infeasible };

struct LpResult {
    LpStatus status;
    Rat value;               // objective value when optimal
    std::vector<Rat> point;  // a maximizer when optimal, a feasible point otherwise empty
};

namespace detail {

// Dictionary simplex for: maximize c.y subject to A y <= b, y >= 0.
class Simplex {
  public:
    Simplex(std::vector<std::vector<Rat>> A, std::vector<Rat> b, std::vector<Rat> c)
        : A_(std::move(A)), b_(std::move(b)), c_(std::move(c)) {
        m_ = A_.size();
        k_ = c_.size();
        nonbasic_.resize(k_);
        basic_.resize(m_);
        for (size_t j = 0; j < k_; ++j) nonbasic_[j] = j;
        for (size_t i = 0; i < m_; ++i) basic_[i] = k_ + i;
    }

    // Returns false on infeasible.
    bool init() {
        size_t worst = 0;
        bool neg = false;
        for (size_t i = 0; i < m_; ++i)
            if (b_[i] < 0 && (!neg || b_[i] < b_[worst])) worst = i, neg = true;
        if (!neg) return true;

        // Auxiliary problem: maximize -x0 with "- x0" added to every row.
        size_t aux = k_ + m_;  // largest id; Bland will still drive it out
        std::vector<Rat> saved_c = c_;
        for (size_t i = 0; i < m_; ++i) A_[i].push_back(Rat(-1));
        nonbasic_.push_back(aux);
        c_.assign(k_ + 1, Rat(0));
        c_[k_] = -1;
        v_ = 0;

        pivot(worst, k_);  // makes all b nonnegative
        if (!run()) return false;  // aux objective is bounded; cannot happen
        if (v_ != 0) return false;

        // Drive x0 out of the basis if it lingers at value 0.
        for (size_t i = 0; i < m_; ++i) {
            if (basic_[i] != aux) continue;
            size_t e = SIZE_MAX;
            for (size_t j = 0; j < nonbasic_.size(); ++j)
                if (nonbasic_[j] != aux && A_[i][j] != 0) { e = j; break; }
            if (e == SIZE_MAX) {  // redundant zero row
                A_.erase(A_.begin() + i);
                b_.erase(b_.begin() + i);
                basic_.erase(basic_.begin() + i);
                m_--;
            } else {
                pivot(i, e);
            }
            break;
        }
        // Delete the aux column.
        size_t col = SIZE_MAX;
        for (size_t j = 0; j < nonbasic_.size(); ++j)
            if (nonbasic_[j] == aux) col = j;
        for (size_t i = 0; i < m_; ++i) A_[i].erase(A_[i].begin() + col);
        nonbasic_.erase(nonbasic_.begin() + col);

        // Re-express the original objective through the current basis.
        c_.assign(nonbasic_.size(), Rat(0));
        v_ = 0;
        for (size_t idx = 0; idx < saved_c.size(); ++idx) {
            if (saved_c[idx] == 0) continue;
            bool placed = false;
            for (size_t j = 0; j < nonbasic_.size(); ++j)
                if (nonbasic_[j] == idx) { c_[j] += saved_c[idx]; placed = true; break; }
            if (placed) continue;
            for (size_t i = 0; i < m_; ++i)
                if (basic_[i] == idx) {
                    v_ += saved_c[idx] * b_[i];
                    for (size_t j = 0; j < nonbasic_.size(); ++j)
                        c_[j] -= saved_c[idx] * A_[i][j];
                    break;
                }
        }
        return true;
    }

    // Returns false when unbounded.
    bool run() {
        for (;;) {
            size_t e = SIZE_MAX;
            for (size_t j = 0; j < nonbasic_.size(); ++j)
                if (c_[j] > 0 && (e == SIZE_MAX || nonbasic_[j] < nonbasic_[e])) e = j;
            if (e == SIZE_MAX) return true;
            size_t r = SIZE_MAX;
            for (size_t i = 0; i < m_; ++i) {
                if (A_[i][e] <= 0) continue;
                if (r == SIZE_MAX) { r = i; continue; }
                Rat lhs = b_[i] * A_[r][e], rhs = b_[r] * A_[i][e];
                if (lhs < rhs || (lhs == rhs && basic_[i] < basic_[r])) r = i;
            }
            if (r == SIZE_MAX) return false;
            pivot(r, e);
        }
    }

    Rat objective() const { return v_; }

    // Value of structural variable idx (0..k-1) at the current basic solution.
    Rat value_of(size_t idx) const {
        for (size_t i = 0; i < m_; ++i)
            if (basic_[i] == idx) return b_[i];
        return Rat(0);
    }

  private:
    void pivot(size_t r, size_t e) {
        Rat piv = A_[r][e];
        size_t cols = nonbasic_.size();
        b_[r] /= piv;
        for (size_t j = 0; j < cols; ++j)
            if (j != e) A_[r][j] /= piv;
        A_[r][e] = Rat(1) / piv;
        for (size_t i = 0; i < m_; ++i) {
            if (i == r || A_[i][e] == 0) continue;
            Rat f = A_[i][e];
            b_[i] -= f * b_[r];
            for (size_t j = 0; j < cols; ++j)
                if (j != e) A_[i][j] -= f * A_[r][j];
            A_[i][e] = -f / piv;
        }
        if (c_[e] != 0) {
            Rat f = c_[e];
            v_ += f * b_[r];
            for (size_t j = 0; j < cols; ++j)
                if (j != e) c_[j] -= f * A_[r][j];
            c_[e] = -f / piv;
        }
        std::swap(basic_[r], nonbasic_[e]);
    }

    std::vector<std::vector<Rat>> A_;
    std::vector<Rat> b_, c_;
    std::vector<size_t> nonbasic_, basic_;
    size_t m_ = 0, k_ = 0;
    Rat v_ = 0;
};

}  // namespace detail

// Maximize obj over { x : constraints }, eq/ge constraints only.
inline LpResult lp_maximize(int n, const std::vector<LinCon>& cons, const Aff& obj) {
    // Free x -> (u, w) with x = u - w.
    size_t k = 2 * static_cast<size_t>(n);
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b;
    auto push_le = [&](const std::vector<Rat>& grad, const Rat& rhs) {
        // grad.x <= rhs
        std::vector<Rat> row(k);
        for (int i = 0; i < n; ++i) {
            row[i] = grad[i];
            row[n + i] = -grad[i];
        }
        A.push_back(std::move(row));
        b.push_back(rhs);
    };
    for (const LinCon& lc : cons) {
        if (lc.rel == Rel::gt) throw DomainError("lp_maximize: strict constraint");
        std::vector<Rat> neg(lc.f.g.size());
        for (size_t i = 0; i < neg.size(); ++i) neg[i] = -lc.f.g[i];
        push_le(neg, lc.f.c);  // f >= 0  <=>  -g.x <= c
        if (lc.rel == Rel::eq) push_le(lc.f.g, -lc.f.c);
    }
    std::vector<Rat> c(k);
    for (int i = 0; i < n; ++i) {
        c[i] = obj.g[i];
        c[n + i] = -obj.g[i];
    }
    detail::Simplex sx(std::move(A), std::move(b), std::move(c));
    if (!sx.init()) return {LpStatus::infeasible, Rat(0), {}};
    if (!sx.run()) return {LpStatus::unbounded, Rat(0), {}};
    std::vector<Rat> x(n);
    for (int i = 0; i < n; ++i) x[i] = sx.value_of(i) - sx.value_of(n + i);
    return {LpStatus::optimal, obj.at(x), x};
}

inline LpResult lp_minimize(int n, const std::vector<LinCon>& cons, const Aff& obj) {
    Aff neg{-obj.c, {}};
    neg.g.resize(obj.g.size());
    for (size_t i = 0; i < obj.g.size(); ++i) neg.g[i] = -obj.g[i];
    LpResult r = lp_maximize(n, cons, neg);
    if (r.status == LpStatus::optimal) r.value = -r.value;
    return r;
}

// A point satisfying all constraints (strict ones strictly), if any.
inline std::optional<std::vector<Rat>> lp_point(int n, const std::vector<LinCon>& cons) {
    bool strict = false;
    for (const LinCon& lc : cons)
        if (lc.rel == Rel::gt) strict = true;
    if (!strict) {
        Aff zero{Rat(0), std::vector<Rat>(n, Rat(0))};
        LpResult r = lp_maximize(n, cons, zero);
        if (r.status == LpStatus::infeasible) return std::nullopt;
        return r.point;
    }
    // Extended problem in n+1 vars, last coordinate is the strictness slack t.
    std::vector<LinCon> ext;
    ext.reserve(cons.size() + 1);
    for (const LinCon& lc : cons) {
        Aff f = lc.f;
        f.g.push_back(lc.rel == Rel::gt ? Rat(-1) : Rat(0));
        ext.push_back({std::move(f), lc.rel == Rel::gt ? Rel::ge : lc.rel});
    }
    Aff cap{Rat(1), std::vector<Rat>(n + 1, Rat(0))};
    cap.g[n] = -1;
    ext.push_back({cap, Rel::ge});  // t <= 1
    Aff obj{Rat(0), std::vector<Rat>(n + 1, Rat(0))};
    obj.g[n] = 1;
    LpResult r = lp_maximize(n + 1, ext, obj);
    if (r.status != LpStatus::optimal || r.value <= 0) return std::nullopt;
    r.point.resize(n);
    return r.point;
}

}  // namespace sktrop
