#pragma once

#include <string>

#include "jssec/engine.hpp"

namespace jssec {

struct ReportOptions {
  bool color = false;
  bool show_suppressed = false;
  /// Include wall time (makes output run-dependent).
  bool timing = false;
};

std::string render_text(const AnalysisResult& result, const ReportOptions& opts = {});
std::string render_json(const AnalysisResult& result, const ReportOptions& opts = {});
std::string render_sarif(const AnalysisResult& result, const ReportOptions& opts = {});

}  // namespace jssec
