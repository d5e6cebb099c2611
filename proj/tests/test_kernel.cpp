#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sktrop/kernel.hpp>
#include <sktrop/parser.hpp>

using namespace sktrop;

namespace {

std::mt19937_64 rng(90210);

Rat random_rat() {
    std::uniform_int_distribution<int> num(-8, 8), den(1, 4);
    return Rat(num(rng)) / den(rng);
}

Polynomial random_poly(int n, int maxms) {
    std::uniform_int_distribution<int> cnt(1, maxms), mag(-5, 5), ex(-2, 2), layer(0, 9);
    std::vector<Monomial> ms;
    int k = cnt(rng);
    for (int i = 0; i < k; ++i) {
        std::vector<long long> e(n);
        for (auto& v : e) v = ex(rng);
        ms.push_back({layer(rng) == 0 ? g(mag(rng)) : t(mag(rng)), e});
    }
    return make_poly(n, std::move(ms));
}

Polynomial random_tangible_poly(int n, int maxms) {
    std::uniform_int_distribution<int> cnt(1, maxms), mag(-5, 5), ex(-2, 2);
    std::vector<Monomial> ms;
    int k = cnt(rng);
    for (int i = 0; i < k; ++i) {
        std::vector<long long> e(n);
        for (auto& v : e) v = ex(rng);
        ms.push_back({t(mag(rng)), e});
    }
    return make_poly(n, std::move(ms));
}

RationalExpr random_expr(int n, int maxms) {
    return make_expr(random_poly(n, maxms), random_poly(n, maxms));
}

RationalExpr standline1() { return hat(parse("x1+x2+t(0)", 2).num, 256); }
RationalExpr standline2() { return parse("x1/(x2+t(0)) + x2/(x1+t(0))", 2, 256); }

}  // namespace

TEST_CASE("membership: reflexivity and power witnesses") {
    RationalExpr f = parse("abs(x1)", 1);
    MemberResult self = member(f, f);
    CHECK(self.member);
    CHECK(self.witness_k == 1);

    // |x1|^2 needs exactly k = 2 over |x1|, and conversely k = 1 suffices
    RationalExpr sq = re_mul(f, f);
    MemberResult up = member(sq, f);
    CHECK(up.member);
    CHECK(up.witness_k == 2);
    MemberResult down = member(f, sq);
    CHECK(down.member);
    CHECK(down.witness_k == 1);
}

TEST_CASE("membership: skeleton obstruction produces a bad cell") {
    // Skel(|x1+t(0)|) = {x <= 0} strictly contains Skel(|x1|) = {0}
    RationalExpr big = re_norm(parse("x1+t(0)", 1));
    RationalExpr small = parse("abs(x1)", 1);
    MemberResult ok = member(big, small);
    CHECK(ok.member);
    MemberResult bad = member(small, big);
    CHECK(!bad.member);
    REQUIRE(bad.bad_cell);
    // the failure region lies where phi_big vanishes but phi_small does not
    auto w = cell_point(1, *bad.bad_cell);
    REQUIRE(w);
    CHECK((*w)[0] <= 0);
}

TEST_CASE("the two tropical-line generators") {
    RationalExpr s1 = standline1(), s2 = standline2();
    CHECK(complex_equal(skel_complex(s1, 256), skel_complex(s2, 256)));
    // x1+x2 is not in the kernel generated by standline2: its norm grows on
    // the diagonal ray of the skeleton where the generator's norm vanishes
    CHECK(!member(parse("x1+x2", 2), s2, 256).member);
    // the two generators have pointwise equal norm magnitudes (they are
    // reciprocal on the third quadrant and equal elsewhere), hence mutually
    // bounded with exponent 1 and kernel-equal
    MemberResult m12 = member(s1, s2, 256);
    CHECK(m12.member);
    CHECK(m12.witness_k == 1);
    CHECK(kernel_equal(s1, s2, 256));
    CHECK(equiv_mod_F(s1, s2, t(1), 256));
    CHECK(in_double_polar(s2, s1, 256));
    CHECK(in_double_polar(s1, s2, 256));
}

TEST_CASE("equal skeletons do not force equal kernels") {
    // |x1| grows, |x1| /\ t(2) is capped: same skeleton {0}, different
    // kernels, reconciled by bounding modulo <F>
    RationalExpr f = parse("abs(x1)", 1);
    RationalExpr h = re_wedge(f, const_expr(1, t(2)));
    CHECK(complex_equal(skel_complex(f), skel_complex(h)));
    CHECK(member(h, f).member);
    CHECK(!member(f, h).member);
    CHECK(!kernel_equal(f, h));
    CHECK(equiv_mod_F(f, h));
}

TEST_CASE("capped membership is ordered by skeletons") {
    // the order correspondence behind equiv_mod_F: once both norms are
    // capped, member() decides exactly skeleton containment
    RationalExpr cap = re_norm(const_expr(2, t(1)));
    for (int iter = 0; iter < 12; ++iter) {
        RationalExpr f = random_expr(2, 2), g = random_expr(2, 2);
        RationalExpr fc = re_wedge(re_norm(f, 256), cap, 256);
        RationalExpr gc = re_wedge(re_norm(g, 256), cap, 256);
        bool by_member = member(fc, gc, 256).member;
        bool by_skel = complex_contains(skel_complex(f, 256), skel_complex(g, 256));
        CHECK(by_member == by_skel);
        CHECK(equiv_mod_F(f, g, t(1), 256) ==
              (by_skel && complex_contains(skel_complex(g, 256), skel_complex(f, 256))));
    }
}

TEST_CASE("bounded_below iff empty skeleton, with certificates") {
    BoundednessResult b = bounded_below(re_add(parse("abs(x1)", 1), const_expr(1, t(2))));
    CHECK(b.bounded);
    CHECK(b.bound == 2);

    for (int iter = 0; iter < 25; ++iter) {
        int n = 1 + iter % 2;
        RationalExpr f = random_expr(n, 3);
        BoundednessResult r = bounded_below(f);
        CHECK(r.bounded == skel_complex(f).empty());
        // the witness attains the global minimum of the norm's magnitude
        std::vector<Scalar> w;
        for (const Rat& x : r.witness) w.push_back(t(x));
        Scalar at = evaluate(re_norm(f), w);
        CHECK(at.magnitude == r.bound);
        if (!r.bounded) CHECK(at.magnitude == 0);
    }
}

TEST_CASE("bounded_above and omega") {
    CHECK(bounded_above(re_wedge(parse("abs(x1)", 1), const_expr(1, t(2)))).bounded);
    CHECK(!bounded_above(parse("abs(x1)", 1)).bounded);

    for (int iter = 0; iter < 10; ++iter) {
        RationalExpr f = random_expr(2, 3);
        RationalExpr om = omega(f, 256);
        BoundednessResult r = bounded_above(om, 256);
        CHECK(r.bounded);
        CHECK(r.bound <= 1);
        CHECK(complex_equal(skel_complex(om, 256), skel_complex(f)));
    }
}

TEST_CASE("kernel product and intersection generators") {
    RationalExpr f = parse("abs(x1)", 2), h = re_norm(parse("x2+t(0)", 2));
    CHECK(complex_equal(skel_complex(kernel_product(f, h, 256), 256),
                        complex_intersection(skel_complex(f), skel_complex(h))));
    CHECK(complex_equal(skel_complex(kernel_intersection(f, h, 256), 256),
                        complex_union(skel_complex(f), skel_complex(h))));
}

TEST_CASE("corner internality") {
    CHECK(corner_internal(parse("x1+t(0)", 1)));
    CHECK(!corner_internal(parse("(x1+t(2))*(x1+t(0))/(x1+t(2))", 1)));
    CHECK_THROWS_AS(corner_internal(parse("x1/(g(0))", 1)), GhostDenominatorError);

    int done = 0;
    while (done < 8) {
        Polynomial p = random_tangible_poly(2, 3);
        if (hat_degenerate(p)) continue;
        RationalExpr h = hat(p, 256);
        if (!is_tangible(h.den)) continue;  // ghost survived a tie multiplicity
        CHECK(corner_internal(h, 256));
        ++done;
    }
    // wedges of corner-internal norms stay corner internal
    RationalExpr a = hat(parse("x1+x2+t(0)", 2).num, 256);
    RationalExpr b = hat(parse("x1+t(1)", 2).num, 256);
    CHECK(corner_internal(re_wedge(re_norm(a, 256), re_norm(b, 256), 256), 256));
}

TEST_CASE("regularity") {
    CHECK(regular(parse("x1/x2", 2)));
    CHECK(!regular(parse("t(0)+x1", 1)));
    CHECK(!regular(parse("(x1+x2)/(x1+x3)", 3)));
    CHECK(regular(standline2()));
}

TEST_CASE("orthogonality of complementary order kernels") {
    for (int e = 1; e <= 3; ++e) {
        std::string m = "x1^" + std::to_string(e) + "*x2";
        RationalExpr one_plus = parse("t(0)+" + m, 2);
        RationalExpr one_plus_inv = parse("t(0)+(" + m + ")^-1", 2);
        CHECK(orthogonal(one_plus, one_plus_inv));
        CHECK(!orthogonal(one_plus, one_plus));
    }
}

TEST_CASE("double polar is a containment closure") {
    for (int iter = 0; iter < 8; ++iter) {
        RationalExpr f = random_expr(2, 3), g = random_expr(2, 3), h = random_expr(2, 3);
        CHECK(in_double_polar(f, f));
        if (in_double_polar(g, f) && in_double_polar(h, g)) CHECK(in_double_polar(h, f));
        CHECK(in_double_polar(g, f) ==
              complex_contains(skel_complex(g), skel_complex(f)));
    }
}
