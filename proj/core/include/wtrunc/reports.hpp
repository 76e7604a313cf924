#ifndef WTRUNC_REPORTS_HPP
#define WTRUNC_REPORTS_HPP

#include "wtrunc/intersect.hpp"
#include "wtrunc/qseries.hpp"
#include "wtrunc/theorems.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wtrunc::reports {

/// Verification entries as a JSON array:
/// [{"theorem":str,"item":int,"m":int,"n":int,
///   "checks":[{"name":str,"status":"pass|fail|skipped","lhs":"p/q","rhs":"p/q","note":str}]}]
/// Rationals are decimal-free "p/q" strings throughout; output is
/// byte-deterministic for identical inputs.
std::string verification_json(const std::vector<theorems::VerificationEntry>& entries);
std::string verification_csv(const std::vector<theorems::VerificationEntry>& entries);
std::string verification_text(const std::vector<theorems::VerificationEntry>& entries);

std::string reconciliation_json(const std::vector<theorems::ReconciliationReport>& reports);
std::string reconciliation_csv(const std::vector<theorems::ReconciliationReport>& reports);
std::string reconciliation_text(const std::vector<theorems::ReconciliationReport>& reports);

struct IntersectionReport {
    std::string curve_a, curve_b;
    intersect::IntersectionResult result;
    std::vector<intersect::CoincidenceRecord> records;
};
std::string intersection_json(const IntersectionReport& rep);
std::string intersection_csv(const IntersectionReport& rep);
std::string intersection_text(const IntersectionReport& rep);

struct CharacterReport {
    int n = 0;
    int weight = 0;
    chars::QSeries orbifold;
    chars::QSeries free_even;
    std::optional<int> discrepancy;
    std::vector<std::int64_t> oracle;  // dimensions for weights 0..oracle.size()-1
    bool partial = false;              // resource guard tripped somewhere
    std::string partial_reason;
};
std::string character_json(const CharacterReport& rep);
std::string character_csv(const CharacterReport& rep);
std::string character_text(const CharacterReport& rep);

}  // namespace wtrunc::reports

#endif
