#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "waring/geometry.hpp"

namespace waring {

// Point files are plain text:
//
//   # anything after '#' is a comment
//   label: six points on a conic     (optional)
//   n: 2                              (required, before the first point)
//   1 0 0
//   1 1/2 -3
//
// Each point row holds n+1 coordinates, each an integer or "p/q".

struct PointSetDocument {
  std::size_t n = 0;
  std::optional<std::string> label;
  std::vector<std::vector<Rational>> points;
  std::vector<std::size_t> point_lines;  ///< 1-based source line of each point
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

PointSetDocument parse_point_document(std::string_view text);

/// Builds the point set. Zero rows and repeated points raise ParseError
/// naming the offending line(s) and 0-based point indices.
PointSet to_point_set(const PointSetDocument& doc);

std::string format_point_document(const PointSetDocument& doc);

}  // namespace waring
