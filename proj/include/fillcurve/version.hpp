#pragma once

namespace fillcurve {

inline constexpr const char* kLibraryVersion = "0.1.0";
/// Bumped whenever a JSON or CSV layout changes.
inline constexpr int kSchemaVersion = 1;

}  // namespace fillcurve
