#pragma once

namespace heavenly {

inline constexpr const char* kToolName = "heavenly";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "report-v1";

} // namespace heavenly
