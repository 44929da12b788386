#include "pcc/planar.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace pcc {

namespace {

int half_plane(const Point& v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; }

// Counterclockwise angular order starting at the positive x-axis.
bool angle_less(const Point& a, const Point& b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return Wide{a.x} * b.y - Wide{a.y} * b.x > 0;
}

bool same_direction(const Point& a, const Point& b) {
  return half_plane(a) == half_plane(b) && Wide{a.x} * b.y - Wide{a.y} * b.x == 0;
}

Point leaving_direction(const Drawing& d, EdgeIndex e, VertexIndex from) {
  auto pl = d.polyline(e);
  if (from == d.source(e)) return {pl[1].x - pl[0].x, pl[1].y - pl[0].y};
  const std::size_t n = pl.size();
  return {pl[n - 2].x - pl[n - 1].x, pl[n - 2].y - pl[n - 1].y};
}

struct Dart {
  EdgeIndex edge;
  VertexIndex tail;
  VertexIndex head;
  Point dir;
};

// Rotation system of one component and the faces it induces. Darts 2i and
// 2i+1 are the two orientations of the component's i-th planar edge.
class Embedding {
 public:
  Embedding(const Drawing& d, const Decomposition& dec, std::size_t component)
      : component_(component) {
    const Component& comp = dec.components.at(component);
    for (EdgeIndex e : comp.planar_edges) {
      VertexIndex s = d.source(e), t = d.target(e);
      darts_.push_back({e, s, t, leaving_direction(d, e, s)});
      darts_.push_back({e, t, s, leaving_direction(d, e, t)});
    }
    for (std::size_t i = 0; i < darts_.size(); ++i) rotation_[darts_[i].tail].push_back(i);
    rot_pos_.resize(darts_.size());
    for (auto& [v, rot] : rotation_) {
      std::sort(rot.begin(), rot.end(), [&](std::size_t a, std::size_t b) {
        return angle_less(darts_[a].dir, darts_[b].dir);
      });
      for (std::size_t i = 0; i < rot.size(); ++i) rot_pos_[rot[i]] = i;
    }
    trace_faces();
  }

  const std::vector<FaceWalk>& faces() const { return faces_; }

  struct Corner {
    std::size_t face;
    std::size_t position;
  };

  // The corner at v whose angular sector contains `dir`.
  Corner corner(VertexIndex v, const Point& dir) const {
    auto it = rotation_.find(v);
    if (it == rotation_.end()) {
      // Isolated vertex: its single face has no walk positions.
      throw AssignmentImpossible("edge attached to an isolated vertex");
    }
    const auto& rot = it->second;
    std::size_t chosen = rot.size();
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const Point& dd = darts_[rot[i]].dir;
      if (same_direction(dd, dir)) {
        throw AssignmentImpossible("crossed edge leaves along a planar edge");
      }
      if (chosen == rot.size() && angle_less(dir, dd)) chosen = i;
    }
    if (chosen == rot.size()) chosen = 0;
    std::size_t dart = rot[chosen];
    return {face_of_[dart], pos_of_[dart]};
  }

 private:
  std::size_t reverse(std::size_t dart) const { return dart ^ 1u; }

  std::size_t ccw_successor(std::size_t dart) const {
    const auto& rot = rotation_.at(darts_[dart].tail);
    return rot[(rot_pos_[dart] + 1) % rot.size()];
  }

  void trace_faces() {
    if (darts_.empty()) {
      FaceWalk w;
      w.face = 0;
      w.component = component_;
      faces_.push_back(std::move(w));
      return;
    }
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    face_of_.assign(darts_.size(), kNone);
    pos_of_.assign(darts_.size(), 0);
    for (std::size_t start = 0; start < darts_.size(); ++start) {
      if (face_of_[start] != kNone) continue;
      FaceWalk w;
      w.face = faces_.size();
      w.component = component_;
      std::size_t cur = start;
      do {
        face_of_[cur] = w.face;
        pos_of_[cur] = w.boundary.size();
        w.boundary.push_back(darts_[cur].tail);
        w.edges.push_back(darts_[cur].edge);
        cur = ccw_successor(reverse(cur));
      } while (cur != start);
      faces_.push_back(std::move(w));
    }
  }

  std::size_t component_;
  std::vector<Dart> darts_;
  std::unordered_map<VertexIndex, std::vector<std::size_t>> rotation_;
  std::vector<std::size_t> rot_pos_;
  std::vector<std::size_t> face_of_;
  std::vector<std::size_t> pos_of_;
  std::vector<FaceWalk> faces_;
};

}  // namespace

const std::vector<VertexIndex>& Decomposition::boundary_of(std::size_t i, std::size_t j) const {
  static const std::vector<VertexIndex> kEmpty;
  auto it = boundary.find({i, j});
  return it == boundary.end() ? kEmpty : it->second;
}

Decomposition decompose(const Drawing& d, const EdgePartition& p) {
  const std::size_t n = d.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (EdgeIndex e : p.planar) {
    std::size_t a = find(d.source(e)), b = find(d.target(e));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  Decomposition dec;
  dec.component_of.assign(n, 0);
  std::unordered_map<std::size_t, std::size_t> root_to_component;
  for (VertexIndex v = 0; v < n; ++v) {
    std::size_t r = find(v);
    auto [it, fresh] = root_to_component.emplace(r, dec.components.size());
    if (fresh) dec.components.emplace_back();
    dec.component_of[v] = it->second;
    dec.components[it->second].vertices.push_back(v);
  }
  for (EdgeIndex e : p.planar) {
    dec.components[dec.component_of[d.source(e)]].planar_edges.push_back(e);
  }
  dec.intra.assign(dec.components.size(), {});
  std::map<ComponentPair, std::set<VertexIndex>> boundary;
  for (EdgeIndex e : p.crossed) {
    VertexIndex u = d.source(e), v = d.target(e);
    std::size_t i = dec.component_of[u], j = dec.component_of[v];
    if (i == j) {
      dec.intra[i].push_back(e);
      continue;
    }
    dec.inter[{std::min(i, j), std::max(i, j)}].push_back(e);
    boundary[{i, j}].insert(u);
    boundary[{j, i}].insert(v);
  }
  for (auto& [key, vs] : boundary) {
    dec.boundary[key] = std::vector<VertexIndex>(vs.begin(), vs.end());
  }
  return dec;
}

std::vector<FaceWalk> face_walks(const Drawing& d, const Decomposition& dec,
                                 std::size_t component) {
  return Embedding(d, dec, component).faces();
}

FaceAssignment assign_to_faces(const Drawing& d, const Decomposition& dec,
                               std::size_t component,
                               const std::vector<EdgeIndex>& intra) {
  Embedding emb(d, dec, component);
  FaceAssignment out;
  out.faces = emb.faces();
  out.face_edges.assign(out.faces.size(), {});
  out.traces.resize(out.faces.size());
  for (std::size_t f = 0; f < out.faces.size(); ++f) {
    out.traces[f].face = f;
    out.traces[f].size = out.faces[f].size();
  }
  for (EdgeIndex e : intra) {
    VertexIndex u = d.source(e), v = d.target(e);
    if (dec.component_of[u] != component || dec.component_of[v] != component) {
      throw AssignmentImpossible("edge " + std::to_string(d.edge_id(e)) +
                                 " does not belong to the component");
    }
    auto cu = emb.corner(u, leaving_direction(d, e, u));
    auto cv = emb.corner(v, leaving_direction(d, e, v));
    if (cu.face != cv.face) {
      throw AssignmentImpossible("edge " + std::to_string(d.edge_id(e)) +
                                 " enters two different faces");
    }
    out.face_edges[cu.face].push_back(e);
    out.traces[cu.face].chords.push_back({cu.position, cv.position, e});
  }
  return out;
}

bool chords_interleave(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

std::vector<std::pair<std::size_t, std::size_t>> trace_crossings(const ConvexTrace& t) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < t.chords.size(); ++i) {
    for (std::size_t j = i + 1; j < t.chords.size(); ++j) {
      if (chords_interleave(t.chords[i].a, t.chords[i].b, t.chords[j].a, t.chords[j].b)) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

void require_simple(const AbstractGraph& g) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [u, v] : g.edges) {
    if (u >= g.vertex_count || v >= g.vertex_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("loop in abstract graph");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      throw std::invalid_argument("parallel edge in abstract graph");
    }
  }
}

PlanarityResult is_planar(const AbstractGraph& g) {
  require_simple(g);
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                       boost::property<boost::vertex_index_t, int>,
                                       boost::property<boost::edge_index_t, int>>;
  BGraph bg(g.vertex_count);
  for (auto [u, v] : g.edges) boost::add_edge(u, v, bg);
  auto index = boost::get(boost::edge_index, bg);
  int next = 0;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(index, *it, next++);

  std::vector<boost::graph_traits<BGraph>::edge_descriptor> kuratowski;
  PlanarityResult result;
  result.planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
  if (!result.planar) {
    for (const auto& e : kuratowski) {
      std::size_t a = boost::source(e, bg), b = boost::target(e, bg);
      result.kuratowski.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(result.kuratowski.begin(), result.kuratowski.end());
  }
  return result;
}

bool is_proper(const AbstractGraph& g, const Coloring& c) {
  if (c.colors.size() != g.vertex_count) return false;
  for (int col : c.colors) {
    if (col < 1 || col > 4) return false;
  }
  for (auto [u, v] : g.edges) {
    if (c.colors[u] == c.colors[v]) return false;
  }
  return true;
}

namespace {

class FourColoring {
 public:
  explicit FourColoring(const AbstractGraph& g) : adj_(g.vertex_count) {
    for (auto [u, v] : g.edges) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    color_.assign(g.vertex_count, 0);
  }

  std::vector<int> run() {
    std::vector<std::size_t> order = smallest_last();
    bool greedy_ok = true;
    for (std::size_t v : order) {
      if (!place(v)) {
        greedy_ok = false;
        break;
      }
    }
    if (!greedy_ok) {
      std::fill(color_.begin(), color_.end(), 0);
      if (!backtrack_all()) throw SearchFailed("no proper 4-colouring exists");
    }
    return color_;
  }

 private:
  // Vertices in the order they are coloured: the reverse of repeatedly
  // removing a minimum-degree vertex.
  std::vector<std::size_t> smallest_last() const {
    const std::size_t n = adj_.size();
    std::vector<std::size_t> deg(n);
    std::set<std::pair<std::size_t, std::size_t>> queue;
    for (std::size_t v = 0; v < n; ++v) {
      deg[v] = adj_[v].size();
      queue.insert({deg[v], v});
    }
    std::vector<bool> removed(n, false);
    std::vector<std::size_t> removal;
    while (!queue.empty()) {
      auto [dv, v] = *queue.begin();
      queue.erase(queue.begin());
      removed[v] = true;
      removal.push_back(v);
      for (std::size_t w : adj_[v]) {
        if (removed[w]) continue;
        queue.erase({deg[w], w});
        --deg[w];
        queue.insert({deg[w], w});
      }
    }
    std::reverse(removal.begin(), removal.end());
    return removal;
  }

  int free_color(std::size_t v) const {
    bool used[5] = {false, false, false, false, false};
    for (std::size_t w : adj_[v]) used[color_[w]] = true;
    for (int c = 1; c <= 4; ++c) {
      if (!used[c]) return c;
    }
    return 0;
  }

  // Vertices reachable from `start` through vertices coloured a or b.
  std::vector<std::size_t> kempe_chain(std::size_t start, int a, int b) const {
    std::vector<std::size_t> chain;
    std::vector<bool> seen(adj_.size(), false);
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      chain.push_back(v);
      for (std::size_t w : adj_[v]) {
        if (!seen[w] && (color_[w] == a || color_[w] == b)) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    return chain;
  }

  bool place(std::size_t v) {
    if (int c = free_color(v)) {
      color_[v] = c;
      return true;
    }
    for (int a = 1; a <= 4; ++a) {
      for (int b = 1; b <= 4; ++b) {
        if (a == b) continue;
        // Swap a/b on every chain through an a-coloured neighbour; this
        // frees a unless some chain also reaches a b-coloured neighbour.
        std::set<std::size_t> region;
        for (std::size_t w : adj_[v]) {
          if (color_[w] != a || region.count(w)) continue;
          for (std::size_t x : kempe_chain(w, a, b)) region.insert(x);
        }
        bool blocked = false;
        for (std::size_t w : adj_[v]) {
          if (color_[w] == b && region.count(w)) blocked = true;
        }
        if (blocked) continue;
        for (std::size_t x : region) color_[x] = (color_[x] == a) ? b : a;
        color_[v] = a;
        return true;
      }
    }
    return false;
  }

  bool backtrack_all() {
    // DSATUR-style exact search.
    const std::size_t n = adj_.size();
    std::vector<std::size_t> order;
    std::vector<bool> taken(n, false);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = n, best_sat = 0, best_deg = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (taken[v]) continue;
        std::set<std::size_t> sat;
        for (std::size_t w : adj_[v]) {
          if (taken[w]) sat.insert(w);
        }
        if (best == n || sat.size() > best_sat ||
            (sat.size() == best_sat && adj_[v].size() > best_deg)) {
          best = v;
          best_sat = sat.size();
          best_deg = adj_[v].size();
        }
      }
      taken[best] = true;
      order.push_back(best);
    }
    return assign(order, 0);
  }

  bool assign(const std::vector<std::size_t>& order, std::size_t i) {
    if (i == order.size()) return true;
    std::size_t v = order[i];
    for (int c = 1; c <= 4; ++c) {
      bool clash = false;
      for (std::size_t w : adj_[v]) clash = clash || color_[w] == c;
      if (clash) continue;
      color_[v] = c;
      if (assign(order, i + 1)) return true;
    }
    color_[v] = 0;
    return false;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> color_;
};

}  // namespace

Coloring four_color(const AbstractGraph& g) {
  require_simple(g);
  Coloring c{FourColoring(g).run()};
  if (!is_proper(g, c)) throw SearchFailed("colouring is not proper");
  return c;
}

AbstractGraph skeleton_graph(const Drawing& d, const EdgePartition& p) {
  AbstractGraph g;
  g.vertex_count = d.vertex_count();
  for (EdgeIndex e : p.planar) g.edges.emplace_back(d.source(e), d.target(e));
  return g;
}

}  // namespace pcc
