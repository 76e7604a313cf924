#ifndef WTRUNC_INTERSECT_HPP
#define WTRUNC_INTERSECT_HPP

#include "wtrunc/curves.hpp"
#include "wtrunc/quotient_ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wtrunc::intersect {

using curves::TruncationCurve;

/// A parameter value on one curve: exact rational, or an algebraic value
/// pinned by a nonzero polynomial constraint it satisfies.
struct ParamValue {
    std::optional<Rat> rational;
    UPoly constraint;  // set when !rational
    bool is_rational() const { return rational.has_value(); }
    std::string str() const;
};

struct IntersectionPoint {
    std::optional<Rat> c;       // exact when known (always, for rational preimages)
    std::optional<Rat> lambda;
    ParamValue preimage_a;
    ParamValue preimage_b;
    bool certified = false;  // both coordinate equalities verified exactly
};

enum class CoincidenceStatus { nontrivial, degenerate_c, excluded_pole, critical_level };
std::string status_name(CoincidenceStatus s);

struct CoincidenceRecord {
    std::string curve_a, curve_b;
    std::optional<Rat> k;  // preimage on curve_a
    std::optional<Rat> l;  // preimage on curve_b
    std::optional<Rat> c;
    std::optional<Rat> lambda;
    CoincidenceStatus status = CoincidenceStatus::nontrivial;
    bool certified = false;
};

/// Candidate parameter that survived elimination but yields no affine
/// intersection (pole artifact of denominator clearing, or a meeting at
/// infinite partner parameter).
struct SpuriousCandidate {
    char side;  // 'a': value lives on curve A, 'b': on curve B
    Rat value;
    std::string reason;
};

/// Certificate branch for the rational-root-free factor of the eliminant:
/// gcd_degree is the degree in the partner parameter of the common factor
/// over that branch, genuine_degree what survives after stripping partner
/// poles and already-reported rational partners.  genuine_degree == 0 on all
/// branches certifies that no intersection point was missed.
struct ResidualBranchReport {
    UPoly modulus;
    int gcd_degree = 0;
    int genuine_degree = 0;
};

struct IntersectionResult {
    std::vector<IntersectionPoint> points;
    UPoly eliminant;  // resultant in A's parameter after eliminating B's
    UPoly residual;   // rational-root-free factor of the eliminant
    std::vector<ResidualBranchReport> branches;
    bool residual_certificate_constant = true;
    std::vector<SpuriousCandidate> spurious;
};

struct DegenerateOverlap : std::runtime_error {
    explicit DegenerateOverlap(const std::string& msg) : std::runtime_error(msg) {}
};

/// All affine intersection points of two distinct curves, by denominator
/// clearing and exact elimination.  Rational preimages are enumerated
/// exhaustively; algebraic ones are certified through quotient-ring gcds.
/// Throws DegenerateOverlap when the curves have the same closure.
IntersectionResult intersect_curves(const TruncationCurve& a, const TruncationCurve& b);

/// Degenerate central charges at which a curve intersection does not certify
/// an isomorphism.
const std::vector<Rat>& degenerate_central_charges();

/// Labels each point with its exclusion status; nontrivial records are
/// exactly those matching no exclusion rule.
std::vector<CoincidenceRecord> filter_points(const std::vector<IntersectionPoint>& points,
                                             const TruncationCurve& a,
                                             const TruncationCurve& b);

/// Nontrivial coincidences between the built-in curves of index m and n.
std::vector<CoincidenceRecord> classify_self(int m, int n);

}  // namespace wtrunc::intersect

#endif
