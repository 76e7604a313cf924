#ifndef WTRUNC_RATFUNC_HPP
#define WTRUNC_RATFUNC_HPP

#include "wtrunc/mpoly.hpp"
#include "wtrunc/upoly.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wtrunc {

/// Normalized quotient of two univariate polynomials in a named variable:
/// gcd(num, den) = 1 and the denominator has coprime integer coefficients
/// with positive leading coefficient, so equality is coefficient equality.
class RatFunc {
public:
    RatFunc() : den_(UPoly::constant(Rat(1))) {}
    RatFunc(std::string var, UPoly num, UPoly den);

    const std::string& var() const { return var_; }
    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    MPoly num_mpoly() const;
    MPoly den_mpoly() const;

    bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }

    /// Exact evaluation; throws std::domain_error at a pole of the
    /// normalized denominator.
    Rat eval(const Rat& x) const;
    bool defined_at(const Rat& x) const { return !den_.eval(x).is_zero(); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string str() const;

private:
    std::string var_ = "x";
    UPoly num_;
    UPoly den_;
};

struct InterpolationError : std::runtime_error {
    enum class Kind { inconsistent_data, degree_bounds_too_small, bad_input };
    InterpolationError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
    Kind kind;
};

/// Unique (up to scalar) rational function through all points within the
/// degree bounds, from the exact nullspace of num(x_i) - y_i den(x_i) = 0
/// computed by fraction-free Gaussian elimination.  Every input point is
/// verified against the normalized result; spurious linear-system solutions
/// that fail to attain a point raise degree_bounds_too_small.
RatFunc interpolate_ratfunc(const std::vector<std::pair<Rat, Rat>>& points,
                            int num_deg, int den_deg,
                            const std::string& var = "x");

}  // namespace wtrunc

#endif
