#include "wtrunc/curves.hpp"

#include "wtrunc/resultant.hpp"

#include <algorithm>
#include <sstream>

namespace wtrunc::curves {

std::string reason_name(ExclusionReason r) {
    switch (r) {
        case ExclusionReason::critical: return "critical";
        case ExclusionReason::pole_of_c: return "pole_of_c";
        case ExclusionReason::pole_of_lambda: return "pole_of_lambda";
    }
    return "?";
}

ExclusionReason reason_from_name(const std::string& s) {
    if (s == "critical") return ExclusionReason::critical;
    if (s == "pole_of_c") return ExclusionReason::pole_of_c;
    if (s == "pole_of_lambda") return ExclusionReason::pole_of_lambda;
    throw std::invalid_argument("unknown exclusion reason: " + s);
}

PoleError::PoleError(Rat v, std::set<ExclusionReason> rs)
    : std::runtime_error([&] {
          std::ostringstream os;
          os << "excluded parameter " << v.str() << " (";
          bool first = true;
          for (auto r : rs) {
              if (!first) os << ", ";
              os << reason_name(r);
              first = false;
          }
          os << ")";
          return os.str();
      }()),
      value(std::move(v)),
      reasons(std::move(rs)) {}

const ExcludedValue* TruncationCurve::find_excluded(const Rat& t) const {
    for (const auto& e : excluded)
        if (e.value == t) return &e;
    return nullptr;
}

std::pair<Rat, Rat> eval_curve(const TruncationCurve& curve, const Rat& t) {
    if (const ExcludedValue* e = curve.find_excluded(t)) throw PoleError(t, e->reasons);
    return {curve.c.eval(t), curve.lambda.eval(t)};
}

const DFamilyData& d_family_data() {
    static const DFamilyData data = [] {
        const MPoly k = MPoly::variable("k");
        const MPoly n = MPoly::variable("n");
        auto C = [](long long v) { return MPoly(Rat(v)); };

        DFamilyData d;
        d.c_num = k * n * (C(2) * k + C(2) * n - C(3));
        d.c_den = (k + C(2) * n - C(2)) * (k + C(2) * n - C(1));

        d.p = C(-112) + C(188) * k - C(62) * k.pow(2) - C(26) * k.pow(3) + C(12) * k.pow(4) +
              C(744) * n - C(1336) * k * n + C(857) * k.pow(2) * n - C(252) * k.pow(3) * n +
              C(36) * k.pow(4) * n - C(1720) * n.pow(2) + C(2534) * k * n.pow(2) -
              C(1198) * k.pow(2) * n.pow(2) + C(188) * k.pow(3) * n.pow(2) + C(1632) * n.pow(3) -
              C(1544) * k * n.pow(3) + C(304) * k.pow(2) * n.pow(3) - C(544) * n.pow(4) +
              C(152) * k * n.pow(4);

        d.q = C(20) - C(19) * k + C(6) * k.pow(2) - C(42) * n + C(28) * k * n + C(28) * n.pow(2);

        d.r = C(44) - C(66) * k + C(22) * k.pow(2) - C(132) * n + C(73) * k * n +
              C(10) * k.pow(2) * n + C(88) * n.pow(2) + C(10) * k * n.pow(2);

        d.lambda_num = d.c_den * d.p;
        d.lambda_den = C(7) * (k - C(2)) * (k + n - C(1)) * (C(2) * n - C(1)) * d.q * d.r;
        return d;
    }();
    return data;
}

namespace {

UPoly to_upoly(const MPoly& p, const std::string& var) {
    auto cs = p.coeffs_in(var);
    std::vector<Rat> dense(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (!cs[i].is_constant())
            throw std::logic_error("to_upoly: polynomial not univariate in " + var);
        dense[i] = cs[i].constant_value();
    }
    return UPoly(std::move(dense));
}

void add_exclusion(std::vector<ExcludedValue>& out, const Rat& v, ExclusionReason r) {
    for (auto& e : out)
        if (e.value == v) {
            e.reasons.insert(r);
            return;
        }
    out.push_back({v, {r}});
}

void sort_exclusions(std::vector<ExcludedValue>& out) {
    std::sort(out.begin(), out.end(),
              [](const ExcludedValue& a, const ExcludedValue& b) { return a.value < b.value; });
}

}  // namespace

TruncationCurve d_curve(int n) {
    if (n < 1) throw std::domain_error("d_curve: index must be >= 1");
    const auto& data = d_family_data();
    Rat nr(n);

    TruncationCurve curve;
    curve.name = "D" + std::to_string(n);
    curve.family = CurveFamily::d_family;
    curve.family_tag = "D";
    curve.indices = {{"n", n}};
    curve.param = "k";
    curve.c = RatFunc("k", to_upoly(data.c_num.subst("n", nr), "k"),
                      to_upoly(data.c_den.subst("n", nr), "k"));
    curve.lambda = RatFunc("k", to_upoly(data.lambda_num.subst("n", nr), "k"),
                           to_upoly(data.lambda_den.subst("n", nr), "k"));

    add_exclusion(curve.excluded, Rat(-2 * n + 2), ExclusionReason::critical);
    add_exclusion(curve.excluded, Rat(-2 * n + 1), ExclusionReason::critical);
    for (const Rat& v : rational_roots_of(curve.c.den()))
        add_exclusion(curve.excluded, v, ExclusionReason::pole_of_c);
    auto rep = find_roots(curve.lambda.den());
    for (const auto& [v, mult] : rep.rational_roots)
        add_exclusion(curve.excluded, v, ExclusionReason::pole_of_lambda);
    curve.lambda_den_residual = rep.residual;
    sort_exclusions(curve.excluded);
    return curve;
}

TruncationCurve fit_curve(const std::string& name, const std::string& param,
                          const std::vector<std::tuple<Rat, Rat, Rat>>& points,
                          const FitBounds& bounds, const std::string& family_tag,
                          const std::map<std::string, int>& indices) {
    std::vector<std::pair<Rat, Rat>> cpts, lpts;
    cpts.reserve(points.size());
    lpts.reserve(points.size());
    for (const auto& [t, cv, lv] : points) {
        cpts.emplace_back(t, cv);
        lpts.emplace_back(t, lv);
    }
    TruncationCurve curve;
    curve.name = name;
    curve.family = family_tag == "D" ? CurveFamily::d_family : CurveFamily::external;
    curve.family_tag = family_tag;
    curve.indices = indices;
    curve.param = param;
    curve.c = interpolate_ratfunc(cpts, bounds.c_num, bounds.c_den, param);
    curve.lambda = interpolate_ratfunc(lpts, bounds.lambda_num, bounds.lambda_den, param);
    for (const Rat& v : rational_roots_of(curve.c.den()))
        add_exclusion(curve.excluded, v, ExclusionReason::pole_of_c);
    auto rep = find_roots(curve.lambda.den());
    for (const auto& [v, mult] : rep.rational_roots)
        add_exclusion(curve.excluded, v, ExclusionReason::pole_of_lambda);
    curve.lambda_den_residual = rep.residual;
    if (curve.family == CurveFamily::d_family) {
        auto it = indices.find("n");
        if (it != indices.end()) {
            add_exclusion(curve.excluded, Rat(-2 * it->second + 2), ExclusionReason::critical);
            add_exclusion(curve.excluded, Rat(-2 * it->second + 1), ExclusionReason::critical);
        }
    }
    sort_exclusions(curve.excluded);
    return curve;
}

MPoly implicitize(const TruncationCurve& curve) {
    if (curve.c.is_constant() || curve.lambda.is_constant())
        throw std::invalid_argument("implicitize: constant curve");
    if (curve.param == "c" || curve.param == "lambda")
        throw std::invalid_argument("implicitize: parameter name collides with plane coordinates");

    MPoly ceq = MPoly::variable("c") * curve.c.den_mpoly() - curve.c.num_mpoly();
    MPoly leq = MPoly::variable("lambda") * curve.lambda.den_mpoly() - curve.lambda.num_mpoly();
    MPoly elim = resultant(ceq, leq, curve.param);
    if (elim.is_zero()) throw std::logic_error("implicitize: vanishing resultant");

    // Candidate factor split: content in c (a polynomial in lambda), content
    // in lambda of the rest, and the doubly primitive remainder.
    auto poly_content_in = [](const MPoly& p, const std::string& var,
                              const std::string& other) -> MPoly {
        UPoly g;
        for (const auto& coeff : p.coeffs_in(var)) {
            if (coeff.is_zero()) continue;
            g = UPoly::gcd(g, to_upoly(coeff, other));
            if (g.degree() == 0) break;
        }
        MPoly out;
        for (std::size_t i = 0; i < g.coeffs().size(); ++i)
            out += MPoly::monomial(g[i], other, static_cast<unsigned>(i));
        return out;
    };

    std::vector<MPoly> candidates;
    MPoly rest = elim;
    MPoly cont_c = poly_content_in(rest, "c", "lambda");
    if (!cont_c.is_constant()) {
        candidates.push_back(cont_c);
        rest = rest.exact_div(cont_c);
    }
    MPoly cont_l = poly_content_in(rest, "lambda", "c");
    if (!cont_l.is_constant()) {
        candidates.push_back(cont_l);
        rest = rest.exact_div(cont_l);
    }
    if (!rest.is_constant()) candidates.push_back(rest);

    // 20 on-curve samples decide which factors are extraneous.
    std::vector<std::pair<Rat, Rat>> samples;
    for (long long j = 1; static_cast<int>(samples.size()) < 20; ++j) {
        for (Rat t : {Rat(j), Rat(-j), Rat(2 * j - 1, 2), Rat(-(2 * j - 1), 2)}) {
            if (curve.is_excluded(t)) continue;
            samples.push_back(eval_curve(curve, t));
            if (samples.size() == 20) break;
        }
    }

    MPoly kept;
    for (const MPoly& cand : candidates) {
        int vanish = 0;
        for (const auto& [cv, lv] : samples)
            if (cand.eval({{"c", cv}, {"lambda", lv}}).is_zero()) ++vanish;
        if (vanish == 0) continue;
        if (vanish != static_cast<int>(samples.size()))
            throw std::logic_error("implicitize: factor vanishes on a proper subset of samples");
        kept = kept.is_zero() ? cand : kept * cand;
    }
    if (kept.is_zero()) throw std::logic_error("implicitize: no factor vanishes on the curve");
    return kept.primitive_part();
}

CurveRegistry::CurveRegistry() {
    for (int n = 1; n <= kBuiltinCount; ++n) {
        TruncationCurve c = d_curve(n);
        by_name_.emplace(c.name, std::move(c));
    }
}

const TruncationCurve* CurveRegistry::find(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? nullptr : &it->second;
}

const TruncationCurve* CurveRegistry::find_external(const std::string& tag, int m) const {
    for (const auto& [name, c] : by_name_) {
        if (c.family != CurveFamily::external || c.family_tag != tag) continue;
        auto it = c.indices.find("m");
        if (it != c.indices.end() && it->second == m) return &c;
    }
    return nullptr;
}

void CurveRegistry::add(TruncationCurve curve, bool allow_override) {
    auto it = by_name_.find(curve.name);
    if (it != by_name_.end()) {
        if (!allow_override)
            throw std::invalid_argument("curve name already registered: " + curve.name);
        it->second = std::move(curve);
        return;
    }
    by_name_.emplace(curve.name, std::move(curve));
}

std::vector<std::string> CurveRegistry::names() const {
    std::vector<std::string> out;
    out.reserve(by_name_.size());
    for (const auto& [name, c] : by_name_) out.push_back(name);
    return out;
}

}  // namespace wtrunc::curves
