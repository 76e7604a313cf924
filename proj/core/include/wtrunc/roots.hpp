#ifndef WTRUNC_ROOTS_HPP
#define WTRUNC_ROOTS_HPP

#include "wtrunc/mpoly.hpp"
#include "wtrunc/upoly.hpp"

#include <utility>
#include <vector>

namespace wtrunc {

/// Complete rational-root split of a univariate polynomial plus certified
/// isolation of the residual's real roots.
struct RootReport {
    /// (root, multiplicity in the input), sorted by value.
    std::vector<std::pair<Rat, int>> rational_roots;
    /// Rational-root-free cofactor, primitive with positive leading
    /// coefficient: prod (x - r)^m * residual == input up to a constant.
    UPoly residual;
    /// Pairwise-disjoint exact-endpoint intervals, one per distinct real root
    /// of the residual.  Endpoints are never roots of the residual.
    std::vector<RootInterval> real_root_intervals;

    int rational_root_count() const {
        int n = 0;
        for (const auto& [r, m] : rational_roots) n += m;
        return n;
    }
};

/// Rational roots via the rational-root theorem on the primitive integer
/// form (trial-division factoring of the outer coefficients); when the outer
/// coefficients resist factoring, falls back to Sturm isolation plus
/// minimal-denominator reconstruction, which finds the same set.
/// Throws std::invalid_argument("identically zero") on the zero polynomial.
RootReport find_roots(const UPoly& p);

/// Univariate view of an MPoly (at most one variable may occur).
RootReport find_roots(const MPoly& p);

/// Rational roots of p only (helper; same completeness guarantee).
std::vector<Rat> rational_roots_of(const UPoly& p);

}  // namespace wtrunc

#endif
