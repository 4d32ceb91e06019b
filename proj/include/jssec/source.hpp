#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jssec {

/// Byte offsets of line starts; always begins with 0.
std::vector<uint32_t> compute_line_offsets(std::string_view text);

/// A file on disk (or stdin) that one or more SourceUnits were taken from.
struct SourceFile {
  std::string path;
  std::string text;
  std::vector<uint32_t> line_offsets;

  SourceFile(std::string p, std::string t);

  /// 1-based line and column (columns count Unicode code points).
  std::pair<uint32_t, uint32_t> line_col(uint32_t offset) const;
};

enum class UnitKind : uint8_t { JsFile, HtmlScriptBlock, HtmlInlineHandler };

std::string_view to_string(UnitKind kind);

struct HtmlContext {
  std::string tag;
  std::string attribute;
};

/// Location of a region in the origin file. Lines and columns are 1-based.
struct Span {
  std::string unit_id;
  uint32_t start_byte = 0;
  uint32_t end_byte = 0;
  uint32_t start_line = 1;
  uint32_t start_col = 1;
  uint32_t end_line = 1;
  uint32_t end_col = 1;

  friend bool operator==(const Span&, const Span&) = default;
};

/// Maps a run of unit-local bytes onto origin-file bytes. A unit text that
/// had HTML entities decoded is described by several segments.
struct OffsetSegment {
  uint32_t local_start;
  uint32_t origin_start;
};

/// One analyzable JavaScript compilation unit.
class SourceUnit {
 public:
  SourceUnit(std::string id, UnitKind kind, std::string text,
             std::shared_ptr<const SourceFile> origin, uint32_t ordinal,
             std::vector<OffsetSegment> segments = {{0, 0}},
             std::optional<HtmlContext> html_context = std::nullopt);

  /// Convenience for a whole .js file (or stdin).
  static SourceUnit from_js_file(std::shared_ptr<const SourceFile> file);

  const std::string& id() const { return id_; }
  const std::string& origin_path() const { return origin_->path; }
  UnitKind kind() const { return kind_; }
  const std::string& text() const { return text_; }
  const std::vector<uint32_t>& line_offsets() const { return line_offsets_; }
  const std::optional<HtmlContext>& html_context() const { return html_context_; }
  const SourceFile& origin() const { return *origin_; }
  const std::shared_ptr<const SourceFile>& origin_ptr() const { return origin_; }
  uint32_t ordinal() const { return ordinal_; }

  uint32_t to_origin_offset(uint32_t local) const;

  /// Span for unit-local byte range [start, end).
  Span span(uint32_t start, uint32_t end) const;

  /// 1-based line within the unit's own text.
  uint32_t local_line(uint32_t local_offset) const;

 private:
  std::string id_;
  UnitKind kind_;
  std::string text_;
  std::vector<uint32_t> line_offsets_;
  std::shared_ptr<const SourceFile> origin_;
  uint32_t ordinal_;
  std::vector<OffsetSegment> segments_;
  std::optional<HtmlContext> html_context_;
};

}  // namespace jssec
