#ifndef WTRUNC_RESULTANT_HPP
#define WTRUNC_RESULTANT_HPP

#include "wtrunc/mpoly.hpp"

namespace wtrunc {

/// Sylvester resultant of p and q with respect to var, computed by the
/// subresultant polynomial-remainder sequence (Collins/Brown-Traub scaling)
/// to keep coefficient growth polynomial instead of exponential.
///
/// Throws std::invalid_argument("no elimination variable") when both inputs
/// are constant in var, and std::invalid_argument for zero inputs.
MPoly resultant(const MPoly& p, const MPoly& q, const std::string& var);

}  // namespace wtrunc

#endif
