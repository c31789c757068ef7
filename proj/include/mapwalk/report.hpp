#pragma once

#include <json.hpp>

#include <string>

#include "mapwalk/analysis.hpp"

namespace mapwalk {

inline constexpr const char* kToolName = "mapwalk";
inline constexpr const char* kToolVersion = "0.1.0";

// Full report document: map summary, spectral summary, analysis payload,
// tool version and config echo. nlohmann's default object keeps keys
// sorted, so dump() is canonical (UTF-8, sorted keys, no insignificant
// whitespace).
nlohmann::json build_report(const Map& map, const Incidence& inc, const SpectralData& spectral,
                            const AnalysisReport& analysis, const std::string& source,
                            const AnalysisOptions& options);

// Write-temp-then-rename; target directory must exist.
void write_text_atomic(const std::string& path, const std::string& content);

}  // namespace mapwalk
