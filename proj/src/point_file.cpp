#include "waring/point_file.hpp"

#include <cctype>
#include <sstream>

namespace waring {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

PointSetDocument parse_point_document(std::string_view text) {
  PointSetDocument doc;
  bool have_n = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) {
      if (eol == text.size()) break;
      continue;
    }

    const auto colon = line.find(':');
    if (colon != std::string_view::npos) {
      const std::string_view key = trim(line.substr(0, colon));
      const std::string_view value = trim(line.substr(colon + 1));
      const std::size_t value_col = static_cast<std::size_t>(value.data() - line.data()) + 1;
      if (!doc.points.empty()) throw ParseError(line_no, 1, "header '" + std::string(key) + "' after the first point");
      if (key == "n") {
        if (have_n) throw ParseError(line_no, 1, "duplicate 'n' header");
        if (value.empty() || value.find_first_not_of("0123456789") != std::string_view::npos) {
          throw ParseError(line_no, value_col, "'n' must be a non-negative integer");
        }
        doc.n = std::stoul(std::string(value));
        have_n = true;
      } else if (key == "label") {
        doc.label = std::string(value);
      } else {
        throw ParseError(line_no, 1, "unknown header '" + std::string(key) + "'");
      }
    } else {
      if (!have_n) throw ParseError(line_no, 1, "point row before the 'n' header");
      const auto tokens = split(line);
      if (tokens.size() != doc.n + 1) {
        const std::size_t col = tokens.size() > doc.n + 1 ? tokens[doc.n + 1].column : line.size() + 1;
        throw ParseError(line_no, col,
                         "expected " + std::to_string(doc.n + 1) + " coordinates, found " + std::to_string(tokens.size()));
      }
      std::vector<Rational> coords;
      coords.reserve(tokens.size());
      for (const auto& t : tokens) {
        try {
          coords.push_back(parse_rational(t.text));
        } catch (const std::invalid_argument& e) {
          throw ParseError(line_no, t.column, e.what());
        }
      }
      doc.points.push_back(std::move(coords));
      doc.point_lines.push_back(line_no);
    }
    if (eol == text.size()) break;
  }
  if (!have_n) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'n' header");
  if (doc.points.empty()) throw ParseError(line_no, 1, "no points");
  return doc;
}

PointSet to_point_set(const PointSetDocument& doc) {
  std::vector<ProjectivePoint> pts;
  pts.reserve(doc.points.size());
  for (std::size_t i = 0; i < doc.points.size(); ++i) {
    const std::size_t line = i < doc.point_lines.size() ? doc.point_lines[i] : 0;
    try {
      pts.emplace_back(doc.points[i]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line, 1, "point " + std::to_string(i) + ": " + e.what());
    }
  }
  try {
    return PointSet(std::move(pts));
  } catch (const DuplicatePointError& e) {
    const std::size_t line = e.second() < doc.point_lines.size() ? doc.point_lines[e.second()] : 0;
    const std::size_t first_line = e.first() < doc.point_lines.size() ? doc.point_lines[e.first()] : 0;
    throw ParseError(line, 1,
                     "point " + std::to_string(e.second()) + " duplicates point " + std::to_string(e.first()) +
                         " (line " + std::to_string(first_line) + ")");
  }
}

std::string format_point_document(const PointSetDocument& doc) {
  std::ostringstream os;
  if (doc.label) os << "label: " << *doc.label << '\n';
  os << "n: " << doc.n << '\n';
  for (const auto& p : doc.points) {
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << to_string(p[i]);
    os << '\n';
  }
  return os.str();
}

}  // namespace waring
