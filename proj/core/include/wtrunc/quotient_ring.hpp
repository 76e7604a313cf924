#ifndef WTRUNC_QUOTIENT_RING_HPP
#define WTRUNC_QUOTIENT_RING_HPP

#include "wtrunc/upoly.hpp"

#include <vector>

namespace wtrunc {

/// Bivariate polynomial in a main variable t with coefficients in Q[s]:
/// ascending t-degree, each coefficient a dense s-polynomial.
using BiPoly = std::vector<UPoly>;

/// One branch of a dynamic-evaluation computation over Q[s]/(modulus): the
/// modulus is a monic squarefree factor of the original one, and `value` is
/// the result on that branch with coefficients reduced mod modulus.
struct QuotientBranch {
    UPoly modulus;
    BiPoly value;
};

/// gcd in t of A and B over Q[s]/(phi), split over factors of phi whenever a
/// leading coefficient is a zero divisor (D5 dynamic evaluation).  phi must be
/// squarefree; each returned gcd is monic in t on its branch.
std::vector<QuotientBranch> quotient_gcd(const BiPoly& A, const BiPoly& B, const UPoly& phi);

/// Repeatedly divides `value` by its gcd with `divisor` on every branch until
/// coprime; the returned branches partition phi.  Used to strip factors whose
/// t-roots are poles of a partner curve.
std::vector<QuotientBranch> strip_common_factors(const BiPoly& value, const BiPoly& divisor,
                                                 const UPoly& phi);

int bipoly_degree(const BiPoly& p);

}  // namespace wtrunc

#endif
