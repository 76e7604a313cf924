#ifndef WTRUNC_UPOLY_HPP
#define WTRUNC_UPOLY_HPP

#include "wtrunc/rational.hpp"

#include <string>
#include <vector>

namespace wtrunc {

/// Dense univariate polynomial over Rat, coefficients in ascending degree.
/// The variable is anonymous; callers attach a name where it matters.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UPoly constant(const Rat& c) { return UPoly({c}); }
    static UPoly x() { return UPoly({Rat(0), Rat(1)}); }
    /// c0 + c1 x + ... from integer literals
    static UPoly from_ints(std::initializer_list<long long> cs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Rat& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& leading() const;
    const Rat& trailing() const;  // lowest nonzero coefficient

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const Rat& s, const UPoly& p);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    Rat eval(const Rat& x) const;
    UPoly derivative() const;
    UPoly shifted(unsigned k) const;  // multiply by x^k

    /// Field division: returns (quotient, remainder).
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
    /// Exact division; throws if a remainder is left.
    UPoly exact_div(const UPoly& d) const;

    /// Monic gcd over Q (monic; gcd(0,0) = 0).
    static UPoly gcd(const UPoly& a, const UPoly& b);
    /// Square-free part: p / gcd(p, p'), primitive with positive leading coeff.
    UPoly squarefree_part() const;

    /// gcd of |integer coefficients| after clearing denominators; the returned
    /// poly has coprime integer coefficients and positive leading coefficient.
    UPoly primitive() const;
    Rat content() const;

    /// Integer coefficient access for primitive polynomials.
    std::vector<Int> int_coeffs() const;  // throws unless all integral

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

/// Number of distinct real roots of squarefree p in (a, b]; a, b must not be
/// roots for the count over open intervals to be exact in the usual sense.
int sturm_count(const std::vector<UPoly>& chain, const Rat& a, const Rat& b);
int sturm_count_all(const std::vector<UPoly>& chain);
std::vector<UPoly> sturm_chain(const UPoly& squarefree);

/// Exact-endpoint open intervals, pairwise disjoint, one distinct real root of
/// the (square-free part of the) input in each.  Endpoints are never roots
/// when the input has no rational roots.
struct RootInterval {
    Rat lo, hi;
};
std::vector<RootInterval> isolate_real_roots(const UPoly& squarefree);

/// Cauchy bound: every real root lies in (-M, M).
Rat root_bound(const UPoly& p);

/// The unique rational with smallest denominator in [lo, hi] (Stern-Brocot walk).
Rat simplest_rational_in(const Rat& lo, const Rat& hi);

}  // namespace wtrunc

#endif
