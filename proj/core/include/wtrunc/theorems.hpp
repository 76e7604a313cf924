#ifndef WTRUNC_THEOREMS_HPP
#define WTRUNC_THEOREMS_HPP

#include "wtrunc/curves.hpp"
#include "wtrunc/intersect.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wtrunc::theorems {

/// Classification tables under verification.  T41: coincidences of the
/// built-in family with the even orthogonal orbifold family (external).
/// T42: with the odd orthogonal family (external).  T43: within the built-in
/// family itself (self-contained).
enum class TheoremId { T41, T42, T43 };

std::string theorem_name(TheoremId id);
TheoremId theorem_from_name(const std::string& s);

/// Closed-form rational function of the two integer indices (m, n).
struct Expr2 {
    MPoly num, den;
    /// nullopt when the denominator vanishes at (m, n).
    std::optional<Rat> eval(int m, int n) const;
};

/// A printed coupling value: prefactor times one named building block over
/// prefactor times g*h, transcribed verbatim including its quirks.
struct LambdaBlock {
    MPoly f, g, h;
    MPoly pref_num, pref_den;
    char numerator_block = 'f';  // which block appears in the numerator
    std::optional<Rat> eval(int m, int n, char block_override = 0) const;
};

struct TheoremItem {
    int number = 0;
    Expr2 k, l;
    std::optional<Expr2> printed_c;
    std::optional<LambdaBlock> printed_lambda;
};

struct TheoremTable {
    TheoremId id = TheoremId::T41;
    std::string partner_tag;  // external family tag; empty for built-in partner
    std::vector<TheoremItem> items;
    bool in_range(int m, int n) const;
};

const TheoremTable& theorem_table(TheoremId id);

struct CheckRow {
    std::string name;
    std::string status;  // "pass" | "fail" | "skipped"
    std::string lhs, rhs;
    std::string note;
};

struct VerificationEntry {
    std::string theorem;
    int item = 0;
    int m = 0, n = 0;
    std::vector<CheckRow> checks;
    bool any_fail() const;
};

/// Specializes each item's closed forms at (m, n) and checks: the printed
/// central charge where one exists, the full point equality when the partner
/// curve is available (built-in for T43, registry-loaded otherwise; absent ->
/// skipped), and that no exclusion rule fires outside the theorem's own
/// exclusions.
std::vector<VerificationEntry> verify_theorem(TheoremId id, int m, int n,
                                              const curves::CurveRegistry& registry);

/// Cross-checks the computed classification against the closed forms: the
/// nontrivial intersection records of the built-in curves (m, n) must be
/// exactly the defined T43 items, every other point must carry an exclusion
/// status, and the residual certificate must be constant.
VerificationEntry verify_classification(int m, int n);

struct ReconcileItem {
    int item = 0;
    Rat f, g, h;  // building-block values at (m, n)
    std::optional<Rat> k;
    std::optional<Rat> lambda_curve;    // coupling from the parametrization
    std::optional<Rat> lambda_printed;  // printed expression, verbatim
    std::optional<Rat> lambda_repair;   // f substituted for the numerator block
    std::optional<Rat> ratio_printed;   // lambda_curve / lambda_printed
    std::optional<Rat> ratio_repair;
    std::string note;
};

struct ReconciliationReport {
    int m = 0, n = 0;
    std::vector<ReconcileItem> items;
};

/// Compares the parametrized coupling against the printed per-item coupling
/// expressions at the T41 item levels, reporting exact agreement or the exact
/// discrepancy ratio.  Never rewrites either side.
ReconciliationReport reconcile_lambda(int m, int n);

}  // namespace wtrunc::theorems

#endif
