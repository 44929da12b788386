#include "pcc/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace pcc {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T number(std::string_view tok, std::size_t line, const char* what) {
  T value{};
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || end != tok.data() + tok.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

DrawingData parse_drawing(std::string_view text) {
  DrawingData d;
  bool header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = split(line);
    if (tok.empty()) continue;

    if (!header) {
      if (tok[0] != kFormatHeader) throw UnknownVersion("missing 'pccdrawing' header");
      if (tok.size() != 2 || tok[1] != std::to_string(kFormatVersion)) {
        throw UnknownVersion("unsupported format version");
      }
      header = true;
      continue;
    }

    if (tok[0] == "v") {
      if (tok.size() != 4) throw ParseError(line_no, "vertex needs: v <id> <x> <y>");
      if (!d.edges.empty()) throw ParseError(line_no, "vertex after edge lines");
      d.vertices.push_back({number<Id>(tok[1], line_no, "id"),
                            {number<Coord>(tok[2], line_no, "coordinate"),
                             number<Coord>(tok[3], line_no, "coordinate")}});
    } else if (tok[0] == "e") {
      if (tok.size() < 8 || (tok.size() - 4) % 2 != 0) {
        throw ParseError(line_no, "edge needs: e <id> <src> <dst> and at least two points");
      }
      EdgeRecord e;
      e.id = number<Id>(tok[1], line_no, "id");
      e.source = number<Id>(tok[2], line_no, "vertex id");
      e.target = number<Id>(tok[3], line_no, "vertex id");
      for (std::size_t i = 4; i < tok.size(); i += 2) {
        e.polyline.push_back({number<Coord>(tok[i], line_no, "coordinate"),
                              number<Coord>(tok[i + 1], line_no, "coordinate")});
      }
      d.edges.push_back(std::move(e));
    } else {
      throw ParseError(line_no, "unknown record '" + std::string(tok[0]) + "'");
    }
  }
  if (!header) throw UnknownVersion("missing 'pccdrawing' header");
  return d;
}

std::string serialize_drawing(const DrawingData& d) {
  std::ostringstream out;
  out << kFormatHeader << ' ' << kFormatVersion << '\n';
  for (const auto& v : d.vertices) {
    out << "v " << v.id << ' ' << v.point.x << ' ' << v.point.y << '\n';
  }
  for (const auto& e : d.edges) {
    out << "e " << e.id << ' ' << e.source << ' ' << e.target;
    for (const Point& p : e.polyline) out << ' ' << p.x << ' ' << p.y;
    out << '\n';
  }
  return out.str();
}

DrawingData read_drawing_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_drawing(buf.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

void Report::add(std::string key, std::string value) {
  lines_.emplace_back(std::move(key), std::move(value));
}

void Report::add(std::string key, std::uint64_t value) {
  add(std::move(key), std::to_string(value));
}

void Report::add(std::string key, bool value) {
  add(std::move(key), std::string(value ? "true" : "false"));
}

std::string Report::str() const {
  std::string out;
  for (const auto& [k, v] : lines_) {
    out += k;
    if (!v.empty()) {
      out += ' ';
      out += v;
    }
    out += '\n';
  }
  out += holds_ ? "status holds\n" : "status fails\n";
  return out;
}

std::string edge_id_list(const Drawing& d, const std::vector<EdgeIndex>& edges) {
  std::string out;
  for (EdgeIndex e : edges) {
    if (!out.empty()) out += ' ';
    out += std::to_string(d.edge_id(e));
  }
  return out;
}

void add_validation(Report& r, const ValidationReport& v) {
  r.add("valid", v.ok());
  for (const Violation& x : v.violations) {
    std::string value = to_string(x.kind);
    for (Id id : x.vertex_ids) value += " v" + std::to_string(id);
    for (Id id : x.edge_ids) value += " e" + std::to_string(id);
    r.add("violation", value);
  }
}

void add_pcc(Report& r, const Drawing& d, const PccReport& p, std::string_view prefix) {
  const std::string key(prefix);
  r.add(key, p.holds);
  r.add(key + "_violations", static_cast<std::uint64_t>(p.violations.size()));
  for (const PccViolation& v : p.violations) {
    r.add(key + "_violation", std::string(to_string(v.reason)) + " " +
                                  std::to_string(d.edge_id(v.first)) + " " +
                                  std::to_string(d.edge_id(v.second)));
  }
}

void add_stats(Report& r, const Drawing& d) {
  const CrossingSet& c = compute_crossings(d);
  EdgePartition p = partition_edges(d, c);
  std::uint64_t bends = 0;
  for (EdgeIndex e = 0; e < d.edge_count(); ++e) bends += d.polyline(e).size() - 2;
  r.add("vertices", static_cast<std::uint64_t>(d.vertex_count()));
  r.add("total_edges", static_cast<std::uint64_t>(d.edge_count()));
  r.add("planar_edges", static_cast<std::uint64_t>(p.planar.size()));
  r.add("crossed_edges", static_cast<std::uint64_t>(p.crossed.size()));
  r.add("crossing_pairs", static_cast<std::uint64_t>(c.pairs().size()));
  r.add("crossing_points", static_cast<std::uint64_t>(c.crossing_point_count()));
  r.add("bends", bends);
  std::size_t max_degree = 0;
  for (EdgeIndex e = 0; e < d.edge_count(); ++e) max_degree = std::max(max_degree, c.degree(e));
  r.add("max_crossings_per_edge", static_cast<std::uint64_t>(max_degree));
}

namespace {

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

void add_certificate(Report& r, const Drawing& d, const Certificate& c) {
  const Totals& t = c.totals;
  r.add("vertices", static_cast<std::uint64_t>(d.vertex_count()));
  r.add("total_edges", static_cast<std::uint64_t>(d.edge_count()));
  add_pcc(r, d, c.hypothesis, "hypothesis");
  if (!c.hypothesis_ok) {
    r.add("certificate", std::string("not_applicable"));
    return;
  }
  r.add("planar_edges", t.planar_edges);
  r.add("crossed_edges", t.crossed_edges);
  r.add("intra_edges", t.intra_edges);
  r.add("inter_edges", t.inter_edges);
  r.add("components", static_cast<std::uint64_t>(c.components.size()));
  r.add("faces", static_cast<std::uint64_t>(c.faces.size()));
  r.add("h_vertices", c.h.vertices);
  r.add("h_edges", c.h.edges);
  r.add("h_planar", c.h.planar);
  for (const ComponentRecord& x : c.components) {
    r.add("component", std::to_string(x.component) + " vertices " + std::to_string(x.vertices) +
                           " planar_edges " + std::to_string(x.planar_edges) + " faces " +
                           std::to_string(x.faces) + " face_size_sum " +
                           std::to_string(x.face_size_sum) + " intra_edges " +
                           std::to_string(x.intra_edges) + " cp_sum " +
                           std::to_string(x.cp_sum) + " limit " + std::to_string(x.bound));
  }
  for (const FaceRecord& f : c.faces) {
    if (f.crossed_edges == 0) continue;
    r.add("face", std::to_string(f.component) + ":" + std::to_string(f.face) + " size " +
                      std::to_string(f.size) + " crossed " + std::to_string(f.crossed_edges) +
                      " max_family " + std::to_string(f.max_family) + " cp " +
                      std::to_string(f.cp_bound) + " coarse " + std::to_string(f.coarse_bound) +
                      " trace " + (f.trace_consistent ? "consistent" : "inconsistent"));
  }
  for (const PairRecord& p : c.pairs) {
    r.add("pair", std::to_string(p.i) + " " + std::to_string(p.j) + " edges " +
                      std::to_string(p.edges) + " boundary " + std::to_string(p.boundary_i) +
                      " " + std::to_string(p.boundary_j) + " limit " +
                      std::to_string(p.bound()));
  }
  for (const SumRecord& s : c.sums) {
    if (s.degree_h == 0) continue;
    r.add("boundary_sum", std::to_string(s.component) + " sum " +
                              std::to_string(s.boundary_sum) + " vertices " +
                              std::to_string(s.vertices) + " degree_h " +
                              std::to_string(s.degree_h) + " limit " +
                              std::to_string(s.bound()));
  }
  r.add("planar_bound", t.planar_bound());
  r.add("intra_bound", t.intra_bound());
  r.add("crossed_bound", t.crossed_bound());
  r.add("bound", t.total_bound());
  r.add("density", fixed(t.density()));
  r.add("certificate", std::string(c.valid() ? "valid" : "invalid"));
}

std::string render_svg(const Drawing& d, const SvgOptions& options) {
  Coord min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  bool first = true;
  auto extend = [&](const Point& p) {
    if (first) {
      min_x = max_x = p.x;
      min_y = max_y = p.y;
      first = false;
    }
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  };
  for (EdgeIndex e = 0; e < d.edge_count(); ++e) {
    for (const Point& p : d.polyline(e)) extend(p);
  }
  for (VertexIndex v = 0; v < d.vertex_count(); ++v) extend(d.point(v));
  const Coord span = std::max<Coord>({max_x - min_x, max_y - min_y, 1});
  const Coord margin = std::max<Coord>(1, span / 20);
  const double stroke = static_cast<double>(span) / 400.0;
  const double dot = static_cast<double>(span) / 150.0;

  const CrossingSet& c = compute_crossings(d);
  EdgePartition part = partition_edges(d, c);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
      << (min_x - margin) << ' ' << (-max_y - margin) << ' ' << (max_x - min_x + 2 * margin)
      << ' ' << (max_y - min_y + 2 * margin) << "\">\n"
      << "<style>.planar{stroke:#1f4e99;fill:none}.crossed{stroke:#c0392b;fill:none}"
      << ".crossing{fill:#000}.vertex{fill:#222}</style>\n"
      << "<g stroke-width=\"" << fixed(stroke) << "\">\n";
  for (EdgeIndex e = 0; e < d.edge_count(); ++e) {
    out << "<polyline class=\"" << (part.is_planar[e] ? "planar" : "crossed")
        << "\" data-edge=\"" << d.edge_id(e) << "\" points=\"";
    bool sep = false;
    for (const Point& p : d.polyline(e)) {
      out << (sep ? " " : "") << p.x << ',' << -p.y;
      sep = true;
    }
    out << "\"/>\n";
  }
  out << "</g>\n";
  if (options.mark_crossings) {
    std::vector<RationalPoint> points;
    for (const CrossingPair& x : c.pairs()) points.insert(points.end(), x.points.begin(), x.points.end());
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    for (const RationalPoint& p : points) {
      out << "<circle class=\"crossing\" cx=\"" << fixed(p.x.to_double()) << "\" cy=\""
          << fixed(-p.y.to_double()) << "\" r=\"" << fixed(dot * 0.6) << "\"/>\n";
    }
  }
  if (options.mark_vertices) {
    for (VertexIndex v = 0; v < d.vertex_count(); ++v) {
      const Point& p = d.point(v);
      out << "<circle class=\"vertex\" data-vertex=\"" << d.vertex_id(v) << "\" cx=\"" << p.x
          << "\" cy=\"" << -p.y << "\" r=\"" << fixed(dot) << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace pcc
