#pragma once

namespace waring {

inline constexpr const char* kVersion = "0.1.0";
/// Bumped whenever the structured report layout changes.
inline constexpr int kReportSchemaVersion = 1;

}  // namespace waring
