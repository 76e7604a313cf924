#include "wtrunc/intersect.hpp"

#include "wtrunc/resultant.hpp"
#include "wtrunc/roots.hpp"

#include <algorithm>
#include <set>

namespace wtrunc::intersect {

namespace {

MPoly mpoly_of(const UPoly& p, const std::string& var) {
    MPoly out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        out += MPoly::monomial(p[i], var, static_cast<unsigned>(i));
    return out;
}

UPoly upoly_of(const MPoly& p, const std::string& var) {
    auto cs = p.coeffs_in(var);
    std::vector<Rat> dense(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (!cs[i].is_constant())
            throw std::logic_error("upoly_of: not univariate in " + var);
        dense[i] = cs[i].constant_value();
    }
    return UPoly(std::move(dense));
}

BiPoly bipoly_in(const MPoly& p, const std::string& main_var, const std::string& coeff_var) {
    BiPoly out;
    for (const MPoly& coeff : p.coeffs_in(main_var)) out.push_back(upoly_of(coeff, coeff_var));
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

// Vanishing certificate: does `implicit` (in c, lambda) vanish identically on
// `curve`?  Sampling more points than the numerator degree bound makes the
// vanishing exact, not heuristic.
bool vanishes_on(const MPoly& implicit, const TruncationCurve& curve) {
    int coord_deg = std::max(std::max(curve.c.num().degree(), curve.c.den().degree()),
                             std::max(curve.lambda.num().degree(), curve.lambda.den().degree()));
    int needed = implicit.total_degree() * std::max(coord_deg, 1) + 1;
    int got = 0;
    for (long long j = 1; got < needed; ++j) {
        for (Rat t : {Rat(j), Rat(-j), Rat(2 * j - 1, 2), Rat(-(2 * j - 1), 2)}) {
            if (curve.is_excluded(t)) continue;
            auto [cv, lv] = curves::eval_curve(curve, t);
            if (!implicit.eval({{"c", cv}, {"lambda", lv}}).is_zero()) return false;
            if (++got == needed) break;
        }
    }
    return true;
}

struct System {
    MPoly P, Q;        // cleared equations in vars (s, t); s on curve A, t on curve B
    UPoly dca, dla;    // normalized denominators of A's coordinates (in s)
    UPoly dcb, dlb;    // of B's (in t)
};

System build_system(const TruncationCurve& a, const TruncationCurve& b) {
    System sys;
    MPoly nca = mpoly_of(a.c.num(), "s"), dca = mpoly_of(a.c.den(), "s");
    MPoly nla = mpoly_of(a.lambda.num(), "s"), dla = mpoly_of(a.lambda.den(), "s");
    MPoly ncb = mpoly_of(b.c.num(), "t"), dcb = mpoly_of(b.c.den(), "t");
    MPoly nlb = mpoly_of(b.lambda.num(), "t"), dlb = mpoly_of(b.lambda.den(), "t");
    sys.P = nca * dcb - ncb * dca;
    sys.Q = nla * dlb - nlb * dla;
    sys.dca = a.c.den();
    sys.dla = a.lambda.den();
    sys.dcb = b.c.den();
    sys.dlb = b.lambda.den();
    return sys;
}

std::optional<std::pair<Rat, Rat>> try_eval(const TruncationCurve& c, const Rat& t) {
    if (!c.c.defined_at(t) || !c.lambda.defined_at(t)) return std::nullopt;
    return std::make_pair(c.c.eval(t), c.lambda.eval(t));
}

// Removes from `poly` every factor it shares with `divisor` (plain rational
// univariate arithmetic).
UPoly strip_factors(UPoly poly, const UPoly& divisor) {
    while (poly.degree() > 0) {
        UPoly g = UPoly::gcd(poly, divisor);
        if (g.degree() == 0) break;
        poly = poly.exact_div(g);
    }
    return poly;
}

}  // namespace

std::string ParamValue::str() const {
    if (rational) return rational->str();
    return "root of " + constraint.str("u");
}

std::string status_name(CoincidenceStatus s) {
    switch (s) {
        case CoincidenceStatus::nontrivial: return "nontrivial";
        case CoincidenceStatus::degenerate_c: return "degenerate_c";
        case CoincidenceStatus::excluded_pole: return "excluded_pole";
        case CoincidenceStatus::critical_level: return "critical_level";
    }
    return "?";
}

const std::vector<Rat>& degenerate_central_charges() {
    static const std::vector<Rat> cs{Rat(1, 2), Rat(-24)};
    return cs;
}

IntersectionResult intersect_curves(const TruncationCurve& a, const TruncationCurve& b) {
    // Same-closure test: mutual vanishing of implicit polynomials.
    {
        bool same_param = a.c == b.c && a.lambda == b.lambda;
        if (same_param)
            throw DegenerateOverlap("curves " + a.name + " and " + b.name +
                                    " are the same parametrization");
        MPoly fa = curves::implicitize(a);
        if (vanishes_on(fa, b)) {
            MPoly fb = curves::implicitize(b);
            if (vanishes_on(fb, a))
                throw DegenerateOverlap("curves " + a.name + " and " + b.name +
                                        " have identical closure");
        }
    }

    System sys = build_system(a, b);
    IntersectionResult res;

    MPoly rs_m = resultant(sys.P, sys.Q, "t");
    MPoly rt_m = resultant(sys.P, sys.Q, "s");
    if (rs_m.is_zero() || rt_m.is_zero())
        throw std::logic_error("intersect_curves: unexpected common component");
    UPoly rs = upoly_of(rs_m, "s");
    UPoly rt = upoly_of(rt_m, "t");
    res.eliminant = rs.primitive();

    auto rep_s = find_roots(rs);
    auto rep_t = find_roots(rt);
    res.residual = rep_s.residual;

    std::set<std::pair<Rat, Rat>> seen;  // (s0, t0) pairs already emitted

    // One scanning pass: rational roots on `first`'s side, partners on `second`'s.
    auto scan = [&](const TruncationCurve& ca, const TruncationCurve& cb, bool a_side,
                    const RootReport& rep) {
        const std::string svar = a_side ? "s" : "t";
        const std::string tvar = a_side ? "t" : "s";
        const UPoly& partner_dc = a_side ? sys.dcb : sys.dca;
        const UPoly& partner_dl = a_side ? sys.dlb : sys.dla;
        for (const auto& [s0, mult] : rep.rational_roots) {
            UPoly ps = upoly_of(sys.P.subst(svar, s0), tvar);
            UPoly qs = upoly_of(sys.Q.subst(svar, s0), tvar);
            UPoly g;
            if (ps.is_zero())
                g = qs;
            else if (qs.is_zero())
                g = ps;
            else
                g = UPoly::gcd(ps, qs);
            if (g.is_zero()) {
                // one cleared equation vanished identically: partner-independent
                // degeneracy, no isolated partner to report
                res.spurious.push_back({a_side ? 'a' : 'b', s0, "degenerate_specialization"});
                continue;
            }
            if (g.degree() == 0) {
                res.spurious.push_back({a_side ? 'a' : 'b', s0, "no_finite_partner"});
                continue;
            }
            auto here = try_eval(ca, s0);
            auto grep = find_roots(g);
            for (const auto& [t0, tm] : grep.rational_roots) {
                Rat skey = a_side ? s0 : t0;
                Rat tkey = a_side ? t0 : s0;
                if (!seen.insert({skey, tkey}).second) continue;
                auto there = try_eval(cb, t0);
                if (!here || !there) {
                    res.spurious.push_back({a_side ? 'a' : 'b', s0, "pole_artifact"});
                    continue;
                }
                if (here->first != there->first || here->second != there->second)
                    throw std::logic_error("intersect_curves: certification failed");
                IntersectionPoint pt;
                pt.c = here->first;
                pt.lambda = here->second;
                pt.preimage_a = {std::optional<Rat>(a_side ? s0 : t0), {}};
                pt.preimage_b = {std::optional<Rat>(a_side ? t0 : s0), {}};
                pt.certified = true;
                res.points.push_back(std::move(pt));
            }
            if (grep.residual.degree() >= 1) {
                UPoly genuine = strip_factors(grep.residual, partner_dc);
                genuine = strip_factors(genuine, partner_dl);
                if (genuine.degree() >= 1 && here) {
                    // partner parameter is algebraic; coordinates still exact
                    IntersectionPoint pt;
                    pt.c = here->first;
                    pt.lambda = here->second;
                    if (a_side) {
                        pt.preimage_a = {std::optional<Rat>(s0), {}};
                        pt.preimage_b = {std::nullopt, genuine};
                    } else {
                        pt.preimage_a = {std::nullopt, genuine};
                        pt.preimage_b = {std::optional<Rat>(s0), {}};
                    }
                    pt.certified = true;
                    res.points.push_back(std::move(pt));
                } else if (genuine.degree() >= 1) {
                    res.spurious.push_back({a_side ? 'a' : 'b', s0, "pole_artifact"});
                }
            }
        }
    };

    scan(a, b, true, rep_s);
    scan(b, a, false, rep_t);

    // Residual certificate: no intersection hides above the irrational roots
    // of the eliminant.
    if (rep_s.residual.degree() >= 1) {
        UPoly rho = rep_s.residual.squarefree_part();
        rho = strip_factors(rho, sys.dca);  // A-side poles carry no affine point
        rho = strip_factors(rho, sys.dla);
        if (rho.degree() >= 1) {
            BiPoly P_t = bipoly_in(sys.P, "t", "s");
            BiPoly Q_t = bipoly_in(sys.Q, "t", "s");
            // partner-pole factors and already-reported rational partners
            UPoly accounted = sys.dcb * sys.dlb;
            for (const auto& [t0, m] : rep_t.rational_roots)
                accounted = accounted * UPoly({-t0, Rat(1)});
            BiPoly accounted_b;
            for (const Rat& cc : accounted.coeffs()) accounted_b.push_back(UPoly::constant(cc));
            for (const auto& branch : quotient_gcd(P_t, Q_t, rho)) {
                if (bipoly_degree(branch.value) <= 0) {
                    res.branches.push_back({branch.modulus, std::max(bipoly_degree(branch.value), 0), 0});
                    continue;
                }
                for (const auto& sub :
                     strip_common_factors(branch.value, accounted_b, branch.modulus)) {
                    ResidualBranchReport r;
                    r.modulus = sub.modulus;
                    r.gcd_degree = bipoly_degree(branch.value);
                    r.genuine_degree = std::max(bipoly_degree(sub.value), 0);
                    if (r.genuine_degree > 0) res.residual_certificate_constant = false;
                    res.branches.push_back(std::move(r));
                }
            }
        }
    }

    std::sort(res.points.begin(), res.points.end(),
              [](const IntersectionPoint& x, const IntersectionPoint& y) {
                  auto key = [](const IntersectionPoint& p) {
                      return std::make_pair(p.preimage_a.rational.value_or(Rat(0)),
                                            p.preimage_b.rational.value_or(Rat(0)));
                  };
                  return key(x) < key(y);
              });
    return res;
}

std::vector<CoincidenceRecord> filter_points(const std::vector<IntersectionPoint>& points,
                                             const TruncationCurve& a,
                                             const TruncationCurve& b) {
    std::vector<CoincidenceRecord> out;
    out.reserve(points.size());
    for (const auto& pt : points) {
        CoincidenceRecord rec;
        rec.curve_a = a.name;
        rec.curve_b = b.name;
        rec.k = pt.preimage_a.rational;
        rec.l = pt.preimage_b.rational;
        rec.c = pt.c;
        rec.lambda = pt.lambda;
        rec.certified = pt.certified;

        const curves::ExcludedValue* ea =
            pt.preimage_a.is_rational() ? a.find_excluded(*pt.preimage_a.rational) : nullptr;
        const curves::ExcludedValue* eb =
            pt.preimage_b.is_rational() ? b.find_excluded(*pt.preimage_b.rational) : nullptr;
        auto has = [](const curves::ExcludedValue* e, curves::ExclusionReason r) {
            return e && e->reasons.count(r);
        };
        bool critical = has(ea, curves::ExclusionReason::critical) ||
                        has(eb, curves::ExclusionReason::critical);
        bool pole = has(ea, curves::ExclusionReason::pole_of_c) ||
                    has(ea, curves::ExclusionReason::pole_of_lambda) ||
                    has(eb, curves::ExclusionReason::pole_of_c) ||
                    has(eb, curves::ExclusionReason::pole_of_lambda);
        bool degen = false;
        if (pt.c)
            for (const Rat& d : degenerate_central_charges())
                if (*pt.c == d) degen = true;

        if (critical)
            rec.status = CoincidenceStatus::critical_level;
        else if (pole)
            rec.status = CoincidenceStatus::excluded_pole;
        else if (degen)
            rec.status = CoincidenceStatus::degenerate_c;
        else
            rec.status = CoincidenceStatus::nontrivial;
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<CoincidenceRecord> classify_self(int m, int n) {
    if (m == n) throw std::invalid_argument("classify_self: indices must differ");
    if (m < 1 || n < 1) throw std::invalid_argument("classify_self: indices must be >= 1");
    curves::TruncationCurve a = curves::d_curve(m);
    curves::TruncationCurve b = curves::d_curve(n);
    auto res = intersect_curves(a, b);
    std::vector<CoincidenceRecord> nontrivial;
    for (auto& rec : filter_points(res.points, a, b))
        if (rec.status == CoincidenceStatus::nontrivial) nontrivial.push_back(std::move(rec));
    return nontrivial;
}

}  // namespace wtrunc::intersect
