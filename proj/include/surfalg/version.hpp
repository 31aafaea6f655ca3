#pragma once

namespace surfalg {

inline constexpr const char* kVersionString = "0.1.0";

// Tag recorded next to frozen corpus values; bump when a basis or sign
// convention changes so stale frozen data is detected instead of trusted.
inline constexpr const char* kOracleTag = "surfalg-0.1.0-c1";

// On-disk cache format for memoized surface levels.
inline constexpr int kLevelFormatVersion = 1;

}  // namespace surfalg
