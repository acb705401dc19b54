#pragma once

/// \file pla.hpp
/// Subset of the Berkeley PLA format: `.i`, `.o`, optional `.p`, cube rows
/// and `.e`. A row is an input cube over {0, 1, -} followed by an output
/// string over {0, 1}; output J of the function is the OR of the cubes whose
/// J-th output character is 1. `#` starts a comment. `.ilb` and `.ob` are
/// accepted and ignored with a warning; any other directive is an error.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bfforms/sop.hpp"
#include "bfforms/truth_table.hpp"

namespace bfforms {

struct PlaRow {
  std::string inputs;
  std::string outputs;
  friend bool operator==(const PlaRow&, const PlaRow&) = default;
};

struct PlaDocument {
  unsigned inputs = 0;
  unsigned outputs = 0;
  std::optional<std::size_t> products;
  std::vector<PlaRow> rows;

  friend bool operator==(const PlaDocument&, const PlaDocument&) = default;
};

class PlaParseError : public std::runtime_error {
public:
  PlaParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

struct PlaParseResult {
  PlaDocument document;
  std::vector<std::string> warnings;
};

/// Throws PlaParseError with a 1-based line number.
PlaParseResult parse_pla_with_warnings(std::string_view text);
inline PlaDocument parse_pla(std::string_view text) { return parse_pla_with_warnings(text).document; }

/// Canonical text: one directive or row per line, single spaces, LF endings,
/// no comments, `.e` last.
std::string emit_pla(const PlaDocument& doc);

/// Truth table of output `output` (0-based). Requires 1 <= inputs <= 6.
TruthTable pla_table(const PlaDocument& doc, unsigned output);
std::vector<TruthTable> pla_tables(const PlaDocument& doc);

/// Single-output document whose rows are the cover's cubes.
PlaDocument pla_from_sop(const SopForm& sop);

}  // namespace bfforms
