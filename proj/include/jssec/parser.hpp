#pragma once

#include <optional>
#include <string_view>

#include "jssec/ast.hpp"
#include "jssec/source.hpp"

namespace jssec {

/// Outcome of parsing one unit. Exactly one of `tree` / `error` is set.
struct ParseResult {
  std::optional<SyntaxTree> tree;
  std::optional<ParseDiagnostic> error;

  bool ok() const { return tree.has_value(); }
};

/// Parses ECMAScript 2020 (script or module goal; import/export syntax makes
/// the unit a module). Syntax from later editions is accepted and noted as a
/// recoverable diagnostic on the tree.
ParseResult parse_source(const SourceUnit& unit);

/// Same as parse_source, over bare text.
ParseResult parse_text(std::string_view text);

}  // namespace jssec
