#pragma once

#include <memory>
#include <string>
#include <vector>

#include "jssec/source.hpp"

namespace jssec {

/// A `<script src=...>` element. No unit is produced for it.
struct ExternalScript {
  std::string src;
  uint32_t offset = 0;
  uint32_t line = 1;
  uint32_t col = 1;
};

struct HtmlExtraction {
  std::vector<SourceUnit> units;
  std::vector<ExternalScript> external_scripts;
};

/// Scans an HTML document for inline script blocks, `on*` handler attributes
/// and `javascript:` URL attributes. Entities inside attribute values are
/// decoded; unit offsets map back to the HTML file.
HtmlExtraction extract_scripts_from_html(std::shared_ptr<const SourceFile> file);

/// Convenience overload that wraps the text in a SourceFile.
HtmlExtraction extract_scripts_from_html(const std::string& path, std::string html_text);

/// Whether a `type` attribute value denotes JavaScript ("" counts).
bool is_javascript_mime(std::string_view type);

}  // namespace jssec
