// Drawing files, key-value reports and SVG output.
//
// File grammar, one record per line, `#` to end of line is a comment:
//   pccdrawing 1
//   v <id> <x> <y>
//   e <id> <src> <dst> <x1> <y1> ... <xk> <yk>
// All vertex lines come before the edge lines. The edge polyline lists both
// endpoints.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcc/certificate.hpp"
#include "pcc/checkers.hpp"
#include "pcc/drawing.hpp"

namespace pcc {

inline constexpr std::string_view kFormatHeader = "pccdrawing";
inline constexpr int kFormatVersion = 1;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class UnknownVersion : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact parse; geometric validity is checked separately by validate_drawing.
DrawingData parse_drawing(std::string_view text);

/// Canonical form: header, vertex lines, edge lines, in stored order.
std::string serialize_drawing(const DrawingData& d);

DrawingData read_drawing_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Ordered `key value` lines closed by a `status holds|fails` line.
class Report {
 public:
  void add(std::string key, std::string value);
  void add(std::string key, std::uint64_t value);
  void add(std::string key, bool value);

  void set_holds(bool holds) { holds_ = holds; }
  bool holds() const { return holds_; }

  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
  bool holds_ = true;
};

/// Edge ids, space separated, in the given index order.
std::string edge_id_list(const Drawing& d, const std::vector<EdgeIndex>& edges);

void add_validation(Report& r, const ValidationReport& v);
void add_pcc(Report& r, const Drawing& d, const PccReport& p, std::string_view prefix);
void add_certificate(Report& r, const Drawing& d, const Certificate& c);
void add_stats(Report& r, const Drawing& d);

struct SvgOptions {
  bool mark_crossings = true;
  bool mark_vertices = true;
};

/// Crossing-free edges get class "planar", crossed edges class "crossed".
/// The y axis points up; the viewBox is the exact bounding box plus a margin.
std::string render_svg(const Drawing& d, const SvgOptions& options = {});

}  // namespace pcc
