#ifndef WTRUNC_CURVE_IO_HPP
#define WTRUNC_CURVE_IO_HPP

#include "wtrunc/curves.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace wtrunc::curves {

/// Schema violation or invariant failure with a field-precise path, e.g.
/// "curves[1].lambda.den[3]".
struct ConfigError : std::runtime_error {
    ConfigError(std::string p, const std::string& msg)
        : std::runtime_error(p + ": " + msg), path(std::move(p)) {}
    std::string path;
};

struct LoadResult {
    std::vector<TruncationCurve> curves;
    std::vector<std::string> warnings;  // e.g. non-coprime input normalized
};

/// Parses and validates a curve-config document.  Declared exclusions must
/// cover every rational pole of the normalized coordinates (missing poles are
/// rejected by value); the built-in family must also declare its critical
/// levels.  Extra user-declared exclusions are kept.
LoadResult load_curves(const std::string& config_text);

/// Canonical serialization; load_curves(serialize_curves(cs)) reproduces the
/// curves and serializing again is byte-identical.
std::string serialize_curves(const std::vector<TruncationCurve>& curves);

}  // namespace wtrunc::curves

#endif
