#pragma once

#include <iosfwd>

namespace hmds::cli {

/// Exit codes.
inline constexpr int kHolds = 0;
inline constexpr int kUsage = 1;
inline constexpr int kViolated = 2;
inline constexpr int kTooLarge = 3;

/// Runs the `hmds` command line; stdout receives exactly one JSON document.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hmds::cli
