#include <doctest.h>

#include "wtrunc/curve_io.hpp"
#include "wtrunc/curves.hpp"

#include <random>

using namespace wtrunc;
using namespace wtrunc::curves;

namespace {

bool excluded_with(const TruncationCurve& c, const Rat& v, ExclusionReason r) {
    const ExcludedValue* e = c.find_excluded(v);
    return e && e->reasons.count(r);
}

// toy curve from raw coordinate functions, exclusions derived from the
// denominators (test helper; production curves come from d_curve/fit/load)
TruncationCurve toy_curve(const std::string& name, RatFunc c, RatFunc lambda) {
    TruncationCurve t;
    t.name = name;
    t.family = CurveFamily::external;
    t.param = c.var();
    for (const Rat& v : rational_roots_of(c.den())) t.excluded.push_back({v, {ExclusionReason::pole_of_c}});
    auto rep = find_roots(lambda.den());
    for (const auto& [v, m] : rep.rational_roots) {
        bool merged = false;
        for (auto& e : t.excluded)
            if (e.value == v) {
                e.reasons.insert(ExclusionReason::pole_of_lambda);
                merged = true;
            }
        if (!merged) t.excluded.push_back({v, {ExclusionReason::pole_of_lambda}});
    }
    t.lambda_den_residual = rep.residual;
    t.c = std::move(c);
    t.lambda = std::move(lambda);
    return t;
}

}  // namespace

TEST_CASE("d_curve(1): central charge simplifies to (2k-1)/(k+1)") {
    TruncationCurve d1 = d_curve(1);
    CHECK(d1.c.num() == UPoly::from_ints({-1, 2}));
    CHECK(d1.c.den() == UPoly::from_ints({1, 1}));
    CHECK(excluded_with(d1, Rat(0), ExclusionReason::critical));
    CHECK(excluded_with(d1, Rat(-1), ExclusionReason::critical));
    CHECK(excluded_with(d1, Rat(-1), ExclusionReason::pole_of_c));
    CHECK(excluded_with(d1, Rat(2), ExclusionReason::pole_of_lambda));
}

TEST_CASE("d_curve(2): central charge equals 2k(2k+1)/((k+2)(k+3))") {
    TruncationCurve d2 = d_curve(2);
    // 2k(2k+1) = 4k^2 + 2k ; (k+2)(k+3) = k^2 + 5k + 6
    CHECK(d2.c.num() == UPoly::from_ints({0, 2, 4}));
    CHECK(d2.c.den() == UPoly::from_ints({6, 5, 1}));
    CHECK(excluded_with(d2, Rat(-2), ExclusionReason::critical));
    CHECK(excluded_with(d2, Rat(-3), ExclusionReason::critical));
    CHECK_THROWS_AS(d_curve(0), std::domain_error);
}

TEST_CASE("eval_curve: derived point values") {
    TruncationCurve d1 = d_curve(1);
    TruncationCurve d2 = d_curve(2);

    CHECK(d1.c.eval(Rat(1)) == Rat(1, 2));
    CHECK(d2.c.eval(Rat(-4, 3)) == Rat(4));

    auto [c14, l14] = eval_curve(d1, Rat(4));
    CHECK(c14 == Rat(7, 5));
    CHECK(l14 == Rat(205, 9338));

    CHECK_THROWS_AS(eval_curve(d1, Rat(0)), PoleError);
    try {
        eval_curve(d1, Rat(0));
    } catch (const PoleError& e) {
        CHECK(e.reasons.count(ExclusionReason::critical) == 1);
    }
}

TEST_CASE("coupling value from the raw master polynomials (second code path)") {
    // direct substitution into the unsimplified building blocks, no RatFunc
    // normalization involved
    const DFamilyData& data = d_family_data();
    std::map<std::string, Rat> at{{"k", Rat(4)}, {"n", Rat(1)}};
    Rat raw = data.lambda_num.eval(at) / data.lambda_den.eval(at);
    CHECK(raw == Rat(205, 9338));
    CHECK(d_curve(1).lambda.eval(Rat(4)) == Rat(205, 9338));
    // and the central charge master form agrees with the curve's normal form
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> v(-30, 30);
    for (int n = 1; n <= 6; ++n) {
        TruncationCurve d = d_curve(n);
        for (int i = 0; i < 20; ++i) {
            Rat k(v(rng), 7);
            if (d.is_excluded(k) || data.c_den.eval({{"k", k}, {"n", Rat(n)}}).is_zero()) continue;
            Rat raw_c = data.c_num.eval({{"k", k}, {"n", Rat(n)}}) /
                        data.c_den.eval({{"k", k}, {"n", Rat(n)}});
            CHECK(raw_c == d.c.eval(k));
        }
    }
}

TEST_CASE("central charge tends to 2n: degree and leading-coefficient ratio") {
    for (int n = 1; n <= 6; ++n) {
        TruncationCurve d = d_curve(n);
        CHECK(d.c.num().degree() == d.c.den().degree());
        CHECK(d.c.num().leading() / d.c.den().leading() == Rat(2 * n));
    }
}

TEST_CASE("implicitize: toy parametrizations") {
    RatFunc t_id("t", UPoly::x(), UPoly::constant(Rat(1)));
    TruncationCurve line = toy_curve("line", t_id, t_id);
    MPoly f = implicitize(line);
    MPoly expect = MPoly::variable("lambda") - MPoly::variable("c");
    CHECK((f == expect || f == -expect));

    RatFunc t2("t", UPoly::from_ints({0, 0, 1}), UPoly::constant(Rat(1)));
    RatFunc t3("t", UPoly::from_ints({0, 0, 0, 1}), UPoly::constant(Rat(1)));
    TruncationCurve cusp = toy_curve("cusp", t2, t3);
    MPoly g = implicitize(cusp);
    MPoly expect2 = MPoly::variable("lambda").pow(2) - MPoly::variable("c").pow(3);
    CHECK((g == expect2 || g == -expect2));
}

TEST_CASE("implicitize vanishes on sampled curve points, n <= 6") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long long> num(-60, 60);
    std::uniform_int_distribution<long long> den(1, 9);
    for (int n = 1; n <= 6; ++n) {
        TruncationCurve d = d_curve(n);
        MPoly f = implicitize(d);
        CHECK(!f.is_zero());
        int done = 0;
        while (done < 200) {
            Rat k(num(rng), den(rng));
            if (d.is_excluded(k)) continue;
            auto [cv, lv] = eval_curve(d, k);
            CHECK(f.eval({{"c", cv}, {"lambda", lv}}).is_zero());
            ++done;
        }
    }
    // the spot value from the curve example sits on the implicit curve
    MPoly f1 = implicitize(d_curve(1));
    CHECK(f1.eval({{"c", Rat(7, 5)}, {"lambda", Rat(205, 9338)}}).is_zero());
}

TEST_CASE("interpolation recovers the n=1 coupling from 12 integer samples") {
    TruncationCurve d1 = d_curve(1);
    std::vector<std::pair<Rat, Rat>> pts;
    for (long long k = -12; pts.size() < 12; ++k) {
        if (d1.is_excluded(Rat(k))) continue;
        pts.emplace_back(Rat(k), d1.lambda.eval(Rat(k)));
    }
    RatFunc fitted = interpolate_ratfunc(pts, 5, 5, "k");
    CHECK(fitted == d1.lambda);
}

TEST_CASE("fit_curve round-trips d_curve(1) and rejects undersampled input") {
    TruncationCurve d1 = d_curve(1);
    std::vector<std::tuple<Rat, Rat, Rat>> pts;
    for (long long k = -14; pts.size() < 14; ++k) {
        if (d1.is_excluded(Rat(k))) continue;
        auto [cv, lv] = eval_curve(d1, Rat(k));
        pts.emplace_back(Rat(k), cv, lv);
    }
    FitBounds bounds{2, 2, 5, 5};
    TruncationCurve fitted = fit_curve("refit", "k", pts, bounds);
    CHECK(fitted.c == d1.c);
    CHECK(fitted.lambda == d1.lambda);
    CHECK(excluded_with(fitted, Rat(2), ExclusionReason::pole_of_lambda));

    std::vector<std::tuple<Rat, Rat, Rat>> few(pts.begin(), pts.begin() + 3);
    CHECK_THROWS_AS(fit_curve("few", "k", few, bounds), InterpolationError);
}

TEST_CASE("curve config: serialize/load round-trip is exact") {
    std::vector<TruncationCurve> curves{d_curve(1), d_curve(2), d_curve(3)};
    std::string text = serialize_curves(curves);
    LoadResult loaded = load_curves(text);
    REQUIRE(loaded.curves.size() == 3);
    CHECK(loaded.warnings.empty());
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(loaded.curves[i].c == curves[i].c);
        CHECK(loaded.curves[i].lambda == curves[i].lambda);
        CHECK(loaded.curves[i].name == curves[i].name);
        REQUIRE(loaded.curves[i].excluded.size() == curves[i].excluded.size());
        for (std::size_t j = 0; j < curves[i].excluded.size(); ++j) {
            CHECK(loaded.curves[i].excluded[j].value == curves[i].excluded[j].value);
            CHECK(loaded.curves[i].excluded[j].reasons == curves[i].excluded[j].reasons);
        }
    }
    CHECK(serialize_curves(loaded.curves) == text);
}

TEST_CASE("curve config: missing declared pole is rejected naming the pole") {
    TruncationCurve d1 = d_curve(1);
    std::vector<ExcludedValue> kept;
    for (const auto& e : d1.excluded)
        if (e.value != Rat(2)) kept.push_back(e);
    d1.excluded = kept;
    std::string text = serialize_curves({d1});
    CHECK_THROWS_AS(load_curves(text), ConfigError);
    try {
        load_curves(text);
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("pole_of_lambda at k=2") != std::string::npos);
    }
}

TEST_CASE("curve config: empty list loads as empty registry") {
    LoadResult r = load_curves("{\"curves\":[]}");
    CHECK(r.curves.empty());
    CHECK(r.warnings.empty());
}

TEST_CASE("curve config: schema violations carry field paths") {
    CHECK_THROWS_AS(load_curves("not json"), ConfigError);
    CHECK_THROWS_AS(load_curves("{}"), ConfigError);
    try {
        load_curves(R"({"curves":[{"name":"x","param":"t","c":{"num":[[1]],"den":[[1,1]]},"lambda":{"num":[[1,1]],"den":[[1,1]]}}]})");
    } catch (const ConfigError& e) {
        CHECK(e.path == "curves[0].c.num[0]");
    }
}

TEST_CASE("registry: builtins present, override guarded") {
    CurveRegistry reg;
    REQUIRE(reg.find("D1") != nullptr);
    REQUIRE(reg.find("D12") != nullptr);
    CHECK(reg.find("D13") == nullptr);
    CHECK(reg.find("nope") == nullptr);
    TruncationCurve fake = d_curve(1);
    CHECK_THROWS_AS(reg.add(fake, false), std::invalid_argument);
    reg.add(fake, true);
    CHECK(reg.find("D1") != nullptr);
}
