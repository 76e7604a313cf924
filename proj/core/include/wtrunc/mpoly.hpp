#ifndef WTRUNC_MPOLY_HPP
#define WTRUNC_MPOLY_HPP

#include "wtrunc/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace wtrunc {

/// Sparse multivariate polynomial over Rat with an explicit, sorted variable
/// list.  Terms map exponent vectors (aligned with the variable list) to
/// nonzero coefficients.  Values are immutable in spirit: every operation
/// returns a fresh polynomial.
class MPoly {
public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, Rat>;

    MPoly() = default;
    explicit MPoly(const Rat& c);

    static MPoly constant(const Rat& c) { return MPoly(c); }
    static MPoly variable(const std::string& name);
    /// c * name^e
    static MPoly monomial(const Rat& c, const std::string& name, unsigned e);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term coefficient; the whole value if is_constant().
    Rat constant_value() const;

    int total_degree() const;
    int degree_in(const std::string& var) const;
    bool depends_on(const std::string& var) const;

    MPoly operator-() const;
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator+=(const MPoly& o) { *this = *this + o; return *this; }
    MPoly& operator-=(const MPoly& o) { *this = *this - o; return *this; }
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }

    friend MPoly operator*(const Rat& c, const MPoly& p);
    MPoly pow(unsigned e) const;

    friend bool operator==(const MPoly& a, const MPoly& b);
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    /// Substitutes an exact value for one variable (dropped from the list).
    MPoly subst(const std::string& var, const Rat& value) const;
    /// Substitutes a polynomial for one variable.
    MPoly subst(const std::string& var, const MPoly& value) const;
    /// Full evaluation; every variable must be assigned.
    Rat eval(const std::map<std::string, Rat>& point) const;

    /// Coefficients of var^0, var^1, ... as polynomials in the remaining
    /// variables.  Empty vector for the zero polynomial.
    std::vector<MPoly> coeffs_in(const std::string& var) const;
    static MPoly from_coeffs(const std::string& var, const std::vector<MPoly>& coeffs);

    /// Leading coefficient with respect to var (zero polynomial -> 0).
    MPoly leading_coeff_in(const std::string& var) const;

    MPoly derivative(const std::string& var) const;

    /// Divides exactly, throwing std::domain_error when the division leaves a
    /// remainder.  Division follows the lex term order on the sorted variable
    /// union.
    MPoly exact_div(const MPoly& d) const;

    /// Rational content: gcd of |coefficients| scaled so the primitive part
    /// has integer coprime coefficients.  Zero polynomial has content 0.
    Rat content() const;
    /// this / content(), with sign chosen so the lex-leading coefficient is
    /// positive.  Returns 0 for 0.
    MPoly primitive_part() const;

    std::string str() const;

    /// Rebuilds with the given variable list (a superset of vars()).
    MPoly with_vars(const std::vector<std::string>& vars) const;

private:
    void insert_term(const Exponents& e, const Rat& c);
    void prune();

    std::vector<std::string> vars_;  // sorted, unique
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

}  // namespace wtrunc

#endif
