#ifndef WTRUNC_CURVES_HPP
#define WTRUNC_CURVES_HPP

#include "wtrunc/mpoly.hpp"
#include "wtrunc/ratfunc.hpp"
#include "wtrunc/roots.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace wtrunc::curves {

enum class ExclusionReason { critical, pole_of_c, pole_of_lambda };

std::string reason_name(ExclusionReason r);
ExclusionReason reason_from_name(const std::string& s);

struct ExcludedValue {
    Rat value;
    std::set<ExclusionReason> reasons;
};

enum class CurveFamily { d_family, external };

/// A named rational parametrization t -> (c(t), lambda(t)) in the
/// (central charge, coupling) plane, together with the parameter values at
/// which the realization it encodes breaks down.
struct TruncationCurve {
    std::string name;
    CurveFamily family = CurveFamily::external;
    std::string family_tag;           // "D" for the built-in family
    std::map<std::string, int> indices;
    std::string param = "k";
    RatFunc c;
    RatFunc lambda;
    std::vector<ExcludedValue> excluded;  // sorted by value
    /// Rational-root-free cofactor of lambda's denominator; its (irrational)
    /// roots are poles that no rational parameter can hit.
    UPoly lambda_den_residual;

    const ExcludedValue* find_excluded(const Rat& t) const;
    bool is_excluded(const Rat& t) const { return find_excluded(t) != nullptr; }
};

struct PoleError : std::runtime_error {
    PoleError(Rat v, std::set<ExclusionReason> rs);
    Rat value;
    std::set<ExclusionReason> reasons;
};

/// Exact point on the curve; throws PoleError when t is excluded.
std::pair<Rat, Rat> eval_curve(const TruncationCurve& curve, const Rat& t);

/// The one-parameter family realized by this package: for n >= 1, the curve
///   c_n(k)      = k n (2k + 2n - 3) / ((k + 2n - 2)(k + 2n - 1))
///   lambda_n(k) = (k + 2n - 2)(k + 2n - 1) p_n(k)
///                 / (7 (k - 2)(k + n - 1)(2n - 1) q_n(k) r_n(k))
/// with the excluded set = critical levels {-2n+2, -2n+1} plus all rational
/// poles of the normalized coordinate functions.
TruncationCurve d_curve(int n);

/// The bivariate master polynomials behind d_curve, in variables (k, n); a
/// single transcription specialized at integer n serves every curve.
struct DFamilyData {
    MPoly c_num, c_den;       // central charge numerator / denominator
    MPoly p, q, r;            // coupling building blocks
    MPoly lambda_num, lambda_den;
};
const DFamilyData& d_family_data();

/// Exact curve fit: interpolates both coordinates through the samples within
/// the degree bounds (attained-point verification included) and derives the
/// excluded set from the fitted denominators.  Interpolation errors propagate.
struct FitBounds {
    int c_num = 2, c_den = 2;
    int lambda_num = 6, lambda_den = 6;
};
TruncationCurve fit_curve(const std::string& name, const std::string& param,
                          const std::vector<std::tuple<Rat, Rat, Rat>>& points,
                          const FitBounds& bounds, const std::string& family_tag = "",
                          const std::map<std::string, int>& indices = {});

/// Nonzero bivariate polynomial in (c, lambda) vanishing on the whole curve,
/// computed by eliminating the parameter and discarding extraneous factors
/// that vanish at none of the sampled curve points.
MPoly implicitize(const TruncationCurve& curve);

/// Name-keyed curve store, write-once after loading.  D1..D12 are built in.
class CurveRegistry {
public:
    static constexpr int kBuiltinCount = 12;

    CurveRegistry();
    const TruncationCurve* find(const std::string& name) const;
    /// Lookup by external family tag and index value ("m").
    const TruncationCurve* find_external(const std::string& tag, int m) const;
    /// Throws std::invalid_argument on name collision unless override is set.
    void add(TruncationCurve curve, bool allow_override = false);
    std::vector<std::string> names() const;

private:
    std::map<std::string, TruncationCurve> by_name_;
};

}  // namespace wtrunc::curves

#endif
