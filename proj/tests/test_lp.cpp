#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sktrop/lp.hpp>

using namespace sktrop;

namespace {

Aff aff(Rat c, std::vector<Rat> g) { return {std::move(c), std::move(g)}; }

}  // namespace

TEST_CASE("1-d bounded maximum") {
    // maximize x subject to x <= 3, x >= -1
    std::vector<LinCon> cons{{aff(3, {-1}), Rel::ge}, {aff(1, {1}), Rel::ge}};
    LpResult r = lp_maximize(1, cons, aff(0, {1}));
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == 3);
    CHECK(r.point[0] == 3);
}

TEST_CASE("unbounded and infeasible cases") {
    std::vector<LinCon> up{{aff(1, {1}), Rel::ge}};  // x >= -1
    CHECK(lp_maximize(1, up, aff(0, {1})).status == LpStatus::unbounded);

    std::vector<LinCon> bad{{aff(-1, {1}), Rel::ge}, {aff(0, {-1}), Rel::ge}};  // x>=1, x<=0
    CHECK(lp_maximize(1, bad, aff(0, {1})).status == LpStatus::infeasible);
}

TEST_CASE("equalities and rational data") {
    // maximize x+y subject to x + 2y = 1, x <= 1/3, y <= 2
    std::vector<LinCon> cons{
        {aff(-1, {1, 2}), Rel::eq},
        {aff(Rat(1) / 3, {-1, 0}), Rel::ge},
        {aff(2, {0, -1}), Rel::ge},
    };
    LpResult r = lp_maximize(2, cons, aff(0, {1, 1}));
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.point[0] == Rat(1) / 3);
    CHECK(r.point[1] == Rat(1) / 3);
    CHECK(r.value == Rat(2) / 3);
}

TEST_CASE("negative orthant feasibility (free variables)") {
    // x <= -5, y = -7
    std::vector<LinCon> cons{{aff(-5, {-1, 0}), Rel::ge}, {aff(7, {0, 1}), Rel::eq}};
    auto p = lp_point(2, cons);
    REQUIRE(p.has_value());
    CHECK((*p)[0] <= -5);
    CHECK((*p)[1] == -7);
}

TEST_CASE("strict feasibility via the slack trick") {
    // x > 0 and x < 1 is feasible
    std::vector<LinCon> a{{aff(0, {1}), Rel::gt}, {aff(1, {-1}), Rel::gt}};
    auto p = lp_point(1, a);
    REQUIRE(p.has_value());
    CHECK((*p)[0] > 0);
    CHECK((*p)[0] < 1);

    // x >= 1 and x < 1 is not
    std::vector<LinCon> b{{aff(-1, {1}), Rel::ge}, {aff(1, {-1}), Rel::gt}};
    CHECK(!lp_point(1, b).has_value());

    // boundary sharing: x >= 0, x <= 0, x > 0 infeasible; x >= 0 alone with x > -1 feasible
    std::vector<LinCon> c{{aff(0, {1}), Rel::ge}, {aff(0, {-1}), Rel::ge}, {aff(0, {1}), Rel::gt}};
    CHECK(!lp_point(1, c).has_value());
}

TEST_CASE("strict feasibility is scale invariant (t <= 1 cap does not truncate)") {
    // 0 < x < 1/1000000: still found
    std::vector<LinCon> cons{{aff(0, {1}), Rel::gt}, {aff(Rat(1) / 1000000, {-1}), Rel::gt}};
    auto p = lp_point(1, cons);
    REQUIRE(p.has_value());
    CHECK((*p)[0] > 0);
    CHECK((*p)[0] < Rat(1) / 1000000);
}

TEST_CASE("degenerate equality systems") {
    // x = 1, y = 1, x + y = 2 (redundant equality)
    std::vector<LinCon> cons{
        {aff(-1, {1, 0}), Rel::eq}, {aff(-1, {0, 1}), Rel::eq}, {aff(-2, {1, 1}), Rel::eq}};
    LpResult r = lp_maximize(2, cons, aff(0, {1, -1}));
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == 0);

    // contradictory equalities
    std::vector<LinCon> bad{{aff(-1, {1, 0}), Rel::eq}, {aff(-2, {1, 0}), Rel::eq}};
    CHECK(lp_maximize(2, bad, aff(0, {1, 0})).status == LpStatus::infeasible);
}

TEST_CASE("no constraints") {
    CHECK(lp_maximize(1, {}, aff(5, {0})).value == 5);
    CHECK(lp_maximize(1, {}, aff(0, {1})).status == LpStatus::unbounded);
    CHECK(lp_point(2, {}).has_value());
}

TEST_CASE("randomized cross-check: optimum is feasible and beats sampled points") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 2 + static_cast<int>(iter % 2);
        std::vector<LinCon> cons;
        // box to keep things bounded
        for (int i = 0; i < n; ++i) {
            std::vector<Rat> e(n, Rat(0));
            e[i] = 1;
            cons.push_back({aff(10, std::vector<Rat>(e.begin(), e.end())), Rel::ge});  // x_i >= -10
            std::vector<Rat> ne(n, Rat(0));
            ne[i] = -1;
            cons.push_back({aff(10, ne), Rel::ge});  // x_i <= 10
        }
        for (int c = 0; c < 3; ++c) {
            std::vector<Rat> grad(n);
            for (auto& v : grad) v = coef(rng);
            cons.push_back({aff(coef(rng), grad), Rel::ge});
        }
        std::vector<Rat> og(n);
        for (auto& v : og) v = coef(rng);
        Aff obj = aff(0, og);
        LpResult r = lp_maximize(n, cons, obj);
        if (r.status != LpStatus::optimal) continue;
        for (const LinCon& lc : cons) CHECK(lc.f.at(r.point) >= 0);
        // random feasible samples never beat the optimum
        std::uniform_int_distribution<int> pt(-10, 10);
        for (int s = 0; s < 20; ++s) {
            std::vector<Rat> x(n);
            for (auto& v : x) v = pt(rng);
            bool feas = true;
            for (const LinCon& lc : cons)
                if ((lc.rel == Rel::eq && lc.f.at(x) != 0) || lc.f.at(x) < 0) feas = false;
            if (feas) CHECK(obj.at(x) <= r.value);
        }
    }
}
