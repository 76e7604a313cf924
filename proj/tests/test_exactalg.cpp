#include <doctest.h>

#include "wtrunc/mpoly.hpp"
#include "wtrunc/rational.hpp"
#include "wtrunc/ratfunc.hpp"
#include "wtrunc/resultant.hpp"
#include "wtrunc/roots.hpp"
#include "wtrunc/upoly.hpp"

#include "oracles.hpp"

#include <random>

using namespace wtrunc;

TEST_CASE("Rat arithmetic is exact and normalized") {
    Rat a(6, -4);
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(0).den() == 1);
    CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
    CHECK((Rat(2, 3) * Rat(9, 4)) == Rat(3, 2));
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
    CHECK(Rat::parse("-22/7").str() == "-22/7");
    CHECK(Rat::parse("5").str() == "5");
    CHECK_THROWS_AS(Rat::parse("1.5"), std::invalid_argument);
}

TEST_CASE("Rat field identity on random inputs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> d(-50, 50), pos(1, 50);
    for (int i = 0; i < 300; ++i) {
        Rat x(d(rng), pos(rng)), y(d(rng), pos(rng));
        // (a/b + c/d) * (b d) == a d + c b as an integer identity
        Rat lhs = (x + y) * Rat(x.den() * y.den());
        Rat rhs = Rat(x.num() * y.den() + y.num() * x.den());
        CHECK(lhs == rhs);
    }
}

namespace {

MPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int max_deg,
                  int terms) {
    std::uniform_int_distribution<long long> coeff(-6, 6);
    std::uniform_int_distribution<int> deg(0, max_deg);
    MPoly p;
    for (int t = 0; t < terms; ++t) {
        MPoly mono(Rat(coeff(rng)));
        for (const auto& v : vars)
            mono *= MPoly::monomial(Rat(1), v, static_cast<unsigned>(deg(rng)));
        p += mono;
    }
    return p;
}

}  // namespace

TEST_CASE("MPoly ring axioms on random inputs") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 120; ++i) {
        MPoly a = random_poly(rng, {"x", "y"}, 3, 3);
        MPoly b = random_poly(rng, {"y", "z"}, 3, 3);
        MPoly c = random_poly(rng, {"x", "z"}, 2, 2);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("MPoly exact division round-trips") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 60; ++i) {
        MPoly a = random_poly(rng, {"x", "y"}, 3, 3);
        MPoly b = random_poly(rng, {"x", "y"}, 2, 2);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).exact_div(b) == a);
    }
}

TEST_CASE("resultant: substitution cases") {
    MPoly x = MPoly::variable("x"), y = MPoly::variable("y");
    MPoly one(Rat(1));

    MPoly r1 = resultant(x - y, y - one, "y");
    CHECK((r1 == x - one || r1 == -(x - one)));

    MPoly r2 = resultant(y * y - x, y - MPoly(Rat(2)), "y");
    MPoly expect = MPoly(Rat(4)) - x;
    CHECK((r2 == expect || r2 == -expect));
}

TEST_CASE("resultant: errors") {
    MPoly x = MPoly::variable("x");
    CHECK_THROWS_WITH_AS(resultant(x, x + MPoly(Rat(1)), "y"), "no elimination variable",
                         std::invalid_argument);
    CHECK_THROWS_AS(resultant(MPoly(), x, "x"), std::invalid_argument);
}

TEST_CASE("resultant matches the Sylvester determinant oracle") {
    std::mt19937_64 rng(17);
    int checked = 0;
    while (checked < 150) {
        MPoly p = random_poly(rng, {"x", "y"}, 3, 3);
        MPoly q = random_poly(rng, {"x", "y"}, 3, 3);
        if (p.degree_in("y") < 1 || q.degree_in("y") < 1) continue;
        MPoly fast = resultant(p, q, "y");
        MPoly slow = test_oracles::sylvester_resultant(p, q, "y");
        CHECK(fast == slow);
        ++checked;
    }
}

TEST_CASE("resultant vanishes exactly at common specializations") {
    // property: for random specializations s of x with nonvanishing leading
    // coefficients, res(p,q,y)(s) == 0 iff gcd(p(s), q(s)) is nonconstant
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<long long> val(-8, 8);
    int checked = 0;
    while (checked < 500) {
        MPoly p = random_poly(rng, {"x", "y"}, 3, 3);
        MPoly q = random_poly(rng, {"x", "y"}, 3, 3);
        if (p.degree_in("y") < 1 || q.degree_in("y") < 1) continue;
        MPoly res = resultant(p, q, "y");
        Rat s(val(rng));
        MPoly ps = p.subst("x", s), qs = q.subst("x", s);
        if (p.leading_coeff_in("y").eval({{"x", s}}).is_zero() ||
            q.leading_coeff_in("y").eval({{"x", s}}).is_zero())
            continue;
        UPoly pu = test_oracles::as_upoly(ps, "y");
        UPoly qu = test_oracles::as_upoly(qs, "y");
        UPoly g = UPoly::gcd(pu, qu);
        Rat rs = res.is_zero() ? Rat(0) : res.eval({{"x", s}});
        CHECK(rs.is_zero() == (g.degree() > 0));
        ++checked;
    }
}

TEST_CASE("find_roots: spec examples") {
    // (2x - 3)(x + 5): rational roots 3/2 and -5, residual constant
    UPoly p = UPoly::from_ints({-3, 2}) * UPoly::from_ints({5, 1});
    auto rep = find_roots(p);
    REQUIRE(rep.rational_roots.size() == 2);
    CHECK(rep.rational_roots[0].first == Rat(-5));
    CHECK(rep.rational_roots[1].first == Rat(3, 2));
    CHECK(rep.residual.degree() == 0);
    CHECK(rep.real_root_intervals.empty());

    // x^2 - 2: no rational roots, two isolating intervals
    auto rep2 = find_roots(UPoly::from_ints({-2, 0, 1}));
    CHECK(rep2.rational_roots.empty());
    CHECK(rep2.residual == UPoly::from_ints({-2, 0, 1}));
    CHECK(rep2.real_root_intervals.size() == 2);

    // 6k^2 + 9k + 6: negative discriminant, no real roots at all
    auto rep3 = find_roots(UPoly::from_ints({6, 9, 6}));
    CHECK(rep3.rational_roots.empty());
    CHECK(rep3.real_root_intervals.empty());

    CHECK_THROWS_WITH_AS(find_roots(UPoly()), "identically zero", std::invalid_argument);
}

TEST_CASE("find_roots: reconstruction on random rational-rooted products") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long long> num(-9, 9), den(1, 5);
    std::uniform_int_distribution<int> mult(1, 2), count(1, 3);
    for (int trial = 0; trial < 80; ++trial) {
        std::vector<std::pair<Rat, int>> expect;
        UPoly p = UPoly::constant(Rat(den(rng)));
        for (int i = 0; i < count(rng); ++i) {
            Rat r(num(rng), den(rng));
            bool dup = false;
            for (auto& [e, m] : expect)
                if (e == r) dup = true;
            if (dup) continue;
            int m = mult(rng);
            expect.emplace_back(r, m);
            for (int j = 0; j < m; ++j) p = p * UPoly({-r, Rat(1)});
        }
        // attach an irrational factor with two real roots
        p = p * UPoly::from_ints({-2, 0, 1});
        std::sort(expect.begin(), expect.end());
        auto rep = find_roots(p);
        REQUIRE(rep.rational_roots.size() == expect.size());
        for (std::size_t i = 0; i < expect.size(); ++i) {
            CHECK(rep.rational_roots[i].first == expect[i].first);
            CHECK(rep.rational_roots[i].second == expect[i].second);
        }
        CHECK(rep.real_root_intervals.size() == 2);
        // product of (x - r)^m times residual reproduces p up to a constant
        UPoly recon = rep.residual;
        for (const auto& [r, m] : rep.rational_roots)
            for (int j = 0; j < m; ++j) recon = recon * UPoly({-r, Rat(1)});
        CHECK(recon.primitive() == p.primitive());
        // every reported root evaluates to exactly zero
        for (const auto& [r, m] : rep.rational_roots) CHECK(p.eval(r).is_zero());
        // interval count matches the Sturm variation count of the residual
        auto chain = sturm_chain(rep.residual.squarefree_part());
        CHECK(static_cast<int>(rep.real_root_intervals.size()) == sturm_count_all(chain));
    }
}

TEST_CASE("isolating intervals each contain exactly one sign change") {
    auto rep = find_roots(UPoly::from_ints({-2, 0, 1}) * UPoly::from_ints({-3, 0, 1}) *
                          UPoly::from_ints({1, -4, 0, 0, 1}));
    for (const auto& iv : rep.real_root_intervals) {
        CHECK(iv.lo < iv.hi);
        UPoly sf = rep.residual.squarefree_part();
        CHECK(!sf.eval(iv.lo).is_zero());
        CHECK(!sf.eval(iv.hi).is_zero());
    }
    // pairwise disjoint
    for (std::size_t i = 1; i < rep.real_root_intervals.size(); ++i)
        CHECK(rep.real_root_intervals[i - 1].hi <= rep.real_root_intervals[i].lo);
}

TEST_CASE("interpolate_ratfunc: line through points") {
    std::vector<std::pair<Rat, Rat>> pts;
    for (long long i = 0; i < 3; ++i) pts.emplace_back(Rat(i), Rat(i));
    RatFunc f = interpolate_ratfunc(pts, 1, 0, "x");
    CHECK(f.num() == UPoly::x());
    CHECK(f.den() == UPoly::constant(Rat(1)));
}

TEST_CASE("interpolate_ratfunc: inconsistent data") {
    std::vector<std::pair<Rat, Rat>> pts{{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(5)}};
    CHECK_THROWS_WITH_AS(interpolate_ratfunc(pts, 1, 0, "x"), "inconsistent data",
                         InterpolationError);
}

TEST_CASE("interpolate_ratfunc: round-trip on random rational functions") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<long long> coeff(-5, 5);
    std::uniform_int_distribution<int> nd(0, 3), dd(0, 2);
    int done = 0;
    while (done < 100) {
        int numd = nd(rng), dend = dd(rng);
        std::vector<Rat> nc(static_cast<std::size_t>(numd) + 1), dc(static_cast<std::size_t>(dend) + 1);
        for (auto& x : nc) x = Rat(coeff(rng));
        for (auto& x : dc) x = Rat(coeff(rng));
        UPoly num(nc), den(dc);
        if (num.is_zero() || den.is_zero()) continue;
        RatFunc f("x", num, den);
        std::vector<std::pair<Rat, Rat>> pts;
        long long x = -20;
        while (pts.size() < static_cast<std::size_t>(numd + dend + 3)) {
            ++x;
            if (!f.defined_at(Rat(x))) continue;
            pts.emplace_back(Rat(x), f.eval(Rat(x)));
        }
        RatFunc g = interpolate_ratfunc(pts, numd, dend, "x");
        CHECK(g == f);
        ++done;
    }
}

TEST_CASE("interpolate_ratfunc: loose bounds still recover the reduced function") {
    // samples of (x+1)/(x-2) with bounds (3,3): nullspace dimension > 1
    RatFunc f("x", UPoly::from_ints({1, 1}), UPoly::from_ints({-2, 1}));
    std::vector<std::pair<Rat, Rat>> pts;
    for (long long x = -4; pts.size() < 8; ++x) {
        if (!f.defined_at(Rat(x))) continue;
        pts.emplace_back(Rat(x), f.eval(Rat(x)));
    }
    CHECK(interpolate_ratfunc(pts, 3, 3, "x") == f);
}
