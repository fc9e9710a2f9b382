#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "arr4/arrangement.hpp"

namespace arr4 {

/// Malformed arrangement file; `line` is 1-based (0 when not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ArrangementText {
  Field field = Field::rational;
  std::vector<Vector> normals;  // as written
};

/**
 * Format:
 *
 *   # comment
 *   field: rational            (or quadratic-tau)
 *   1 0 0 0
 *   1/2 1+t 0 -t
 *
 * One normal per line, four whitespace-separated coordinates.
 */
ArrangementText parse_arrangement_text(std::string_view text);

/// Parses and validates; ParseError or ArrangementError.
Arrangement parse_arrangement(std::string_view text);
Arrangement read_arrangement(const std::filesystem::path& path);

/// Canonical text: header, canonical normals sorted by their coordinates.
std::string emit_arrangement(const Arrangement& a);
void write_arrangement(const std::filesystem::path& path, const Arrangement& a);

}  // namespace arr4
