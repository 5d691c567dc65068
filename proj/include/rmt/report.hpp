#pragma once

#include <cstdint>
#include <string>

#include "rmt/charpoly.hpp"

namespace rmt {

inline constexpr const char* kToolVersion = "0.1.0";

// Shortest representation that round-trips a double exactly.
std::string format_g17(double x);

// 64-bit FNV-1a hash of the bytes of `text`, as 16 hex digits.  Used to
// fingerprint the effective configuration inside reports.
std::string fnv1a_hex(const std::string& text);

// Writes content to a sibling temporary file and renames it into place, so
// readers never observe a half-written file.
void atomic_write_file(const std::string& path, const std::string& content);

// CSV round-trip for curve estimates.  Columns, in order:
//   mass,value,stderr,n_samples,seed
// Reading back reconstructs only the diagonal of the mean covariance.
std::string curve_to_csv(const CurveEstimate& curve);
CurveEstimate curve_from_csv(const std::string& text);

}  // namespace rmt
