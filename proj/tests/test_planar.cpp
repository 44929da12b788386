#include <doctest.h>

#include <random>
#include <set>

#include "pcc/construct.hpp"
#include "pcc/planar.hpp"
#include "support.hpp"

using namespace pcc;
using test::fixture;
using test::straight;

namespace {

struct Setup {
  explicit Setup(Drawing drawing)
      : d(std::move(drawing)), p(partition_edges(d, compute_crossings(d))), dec(decompose(d, p)) {}
  Drawing d;
  EdgePartition p;
  Decomposition dec;
};

AbstractGraph complete(std::size_t n) {
  AbstractGraph g{n, {}};
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
  }
  return g;
}

// Triangulation by repeatedly inserting a vertex into a random face.
AbstractGraph stacked_triangulation(std::size_t n, std::mt19937_64& rng) {
  AbstractGraph g{3, {{0, 1}, {1, 2}, {0, 2}}};
  std::vector<std::array<std::size_t, 3>> faces = {{0, 1, 2}, {0, 1, 2}};
  while (g.vertex_count < n) {
    std::size_t f = rng() % faces.size();
    auto [a, b, c] = faces[f];
    std::size_t v = g.vertex_count++;
    g.edges.emplace_back(a, v);
    g.edges.emplace_back(b, v);
    g.edges.emplace_back(c, v);
    faces[f] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({a, c, v});
  }
  return g;
}

}  // namespace

TEST_SUITE("planar") {

TEST_CASE("decomposition of two components") {
  Setup s(fixture("two_comp_cross"));
  REQUIRE(s.dec.components.size() == 2);
  CHECK(s.dec.components[0].vertices == std::vector<VertexIndex>{0, 1});
  CHECK(s.dec.components[1].vertices == std::vector<VertexIndex>{2, 3});
  REQUIRE(s.dec.inter.count({0, 1}) == 1);
  CHECK(s.dec.inter.at({0, 1}).size() == 2);
  CHECK(s.dec.boundary_of(0, 1) == std::vector<VertexIndex>{0, 1});
  CHECK(s.dec.boundary_of(1, 0) == std::vector<VertexIndex>{2, 3});
  CHECK(s.dec.intra[0].empty());
  CHECK(s.dec.intra[1].empty());
}

TEST_CASE("decomposition of a tree and of the construction") {
  Setup tree(validated(straight({{0, 0}, {2, 1}, {4, 0}, {2, 4}}, {{0, 1}, {1, 2}, {1, 3}})));
  CHECK(tree.dec.components.size() == 1);
  CHECK(tree.dec.inter.empty());
  CHECK(tree.dec.boundary.empty());

  Setup t(validated(toth_construction(20)));
  CHECK(t.dec.components.size() == 1);
  CHECK(t.dec.inter.empty());
  CHECK(t.dec.intra[0].size() == t.p.crossed.size());
  test::UnionFind uf(t.d.vertex_count());
  for (EdgeIndex e : t.p.planar) uf.unite(t.d.source(e), t.d.target(e));
  std::set<std::size_t> roots;
  for (VertexIndex v = 0; v < t.d.vertex_count(); ++v) roots.insert(uf.find(v));
  CHECK(roots.size() == 1);
}

TEST_CASE("face walks of small components") {
  Setup tri(validated(straight({{0, 0}, {4, 0}, {0, 4}}, {{0, 1}, {1, 2}, {2, 0}})));
  auto f = face_walks(tri.d, tri.dec, 0);
  REQUIRE(f.size() == 2);
  CHECK(f[0].size() == 3);
  CHECK(f[1].size() == 3);

  Setup path(validated(straight({{0, 0}, {4, 0}, {8, 1}}, {{0, 1}, {1, 2}})));
  f = face_walks(path.d, path.dec, 0);
  REQUIRE(f.size() == 1);
  CHECK(f[0].size() == 4);

  Setup lone(validated(straight({{0, 0}}, {})));
  f = face_walks(lone.d, lone.dec, 0);
  REQUIRE(f.size() == 1);
  CHECK(f[0].size() == 0);
}

TEST_CASE("face sums and Euler on every component") {
  std::vector<Drawing> ds;
  ds.push_back(validated(toth_construction(25)));
  for (const char* name : {"convex_k4", "convex_k5", "bowtie", "three_components"}) {
    ds.push_back(fixture(name));
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    ds.push_back(validated(random_pcc_greedy(25, kUnlimited, {seed})));
  }
  for (const Drawing& d : ds) {
    Setup s(validated(d.data()));
    for (std::size_t c = 0; c < s.dec.components.size(); ++c) {
      auto walks = face_walks(s.d, s.dec, c);
      std::size_t sum = 0;
      for (const auto& w : walks) sum += w.size();
      const auto& comp = s.dec.components[c];
      CHECK(sum == 2 * comp.planar_edges.size());
      CHECK(comp.vertices.size() + walks.size() == comp.planar_edges.size() + 2);
    }
  }
}

TEST_CASE("face assignment of the square diagonals") {
  Setup s(fixture("convex_k4"));
  FaceAssignment a = assign_to_faces(s.d, s.dec, 0, s.dec.intra[0]);
  std::size_t holder = a.faces.size();
  for (std::size_t f = 0; f < a.faces.size(); ++f) {
    if (!a.face_edges[f].empty()) holder = f;
  }
  REQUIRE(holder < a.faces.size());
  CHECK(a.face_edges[holder].size() == 2);
  CHECK(a.faces[holder].size() == 4);
  const ConvexTrace& t = a.traces[holder];
  REQUIRE(t.chords.size() == 2);
  // Chords join opposite walk positions.
  for (const Chord& c : t.chords) {
    std::size_t gap = c.a > c.b ? c.a - c.b : c.b - c.a;
    CHECK(gap == 2);
  }
  CHECK(trace_crossings(t).size() == 1);

  // The holding face is the bounded one: the diagonal midpoints lie inside
  // the square spanned by the walk.
  for (EdgeIndex e : a.face_edges[holder]) {
    auto pl = s.d.polyline(e);
    double mx = (pl.front().x + pl.back().x) / 2.0, my = (pl.front().y + pl.back().y) / 2.0;
    CHECK(mx > 0);
    CHECK(mx < 4);
    CHECK(my > 0);
    CHECK(my < 4);
  }
}

TEST_CASE("a chord between two leaves of a tree") {
  // Star centre 0 with leaves 1, 2, 3; the chord 1-2 arches over the centre
  // and is crossed by a separate segment to keep it in E''.
  DrawingData d = straight({{0, 0}, {-4, 0}, {4, 0}, {0, -4}, {0, 2}, {0, 6}},
                           {{0, 1}, {0, 2}, {0, 3}, {4, 5}});
  d.edges.push_back({4, 1, 2, {{-4, 0}, {-4, 4}, {4, 4}, {4, 0}}});
  Setup s(validated(d));
  // Components: the star {0,1,2,3}; the crossed segment leaves 4 and 5 alone.
  REQUIRE(s.dec.components.size() == 3);
  REQUIRE(s.dec.intra[0].size() == 1);
  FaceAssignment a = assign_to_faces(s.d, s.dec, 0, s.dec.intra[0]);
  REQUIRE(a.faces.size() == 1);
  REQUIRE(a.traces[0].chords.size() == 1);
  const Chord& c = a.traces[0].chords[0];
  CHECK(a.faces[0].boundary[c.a] != a.faces[0].boundary[c.b]);
  std::set<VertexIndex> ends = {a.faces[0].boundary[c.a], a.faces[0].boundary[c.b]};
  CHECK(ends == std::set<VertexIndex>{1, 2});
}

TEST_CASE("chords at a revisited cut vertex use distinct instances") {
  Setup s(fixture("bowtie"));
  REQUIRE(s.dec.components.size() == 1);
  FaceAssignment a = assign_to_faces(s.d, s.dec, 0, s.dec.intra[0]);
  const VertexIndex cut = 0;
  bool checked = false;
  for (std::size_t f = 0; f < a.faces.size(); ++f) {
    const FaceWalk& w = a.faces[f];
    std::vector<std::size_t> at_cut;
    for (std::size_t t = 0; t < w.size(); ++t) {
      if (w.boundary[t] == cut) at_cut.push_back(t);
    }
    if (at_cut.size() < 2) continue;
    // The outer face visits the cut vertex twice; the upward and downward
    // edges at the cut vertex anchor at different visits.
    std::set<std::size_t> anchors;
    for (const Chord& c : a.traces[f].chords) {
      if (w.boundary[c.a] == cut) anchors.insert(c.a);
      if (w.boundary[c.b] == cut) anchors.insert(c.b);
    }
    CHECK(anchors.size() == 2);
    checked = true;
  }
  CHECK(checked);
}

TEST_CASE("trace crossings imply drawing crossings") {
  std::vector<Drawing> ds;
  for (std::size_t n : {10, 17, 33}) ds.push_back(validated(toth_construction(n)));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    ds.push_back(validated(random_pcc_greedy(20, kUnlimited, {seed})));
  }
  for (const Drawing& d0 : ds) {
    Setup s(validated(d0.data()));
    for (std::size_t c = 0; c < s.dec.components.size(); ++c) {
      FaceAssignment a = assign_to_faces(s.d, s.dec, c, s.dec.intra[c]);
      for (const ConvexTrace& t : a.traces) {
        for (auto [i, j] : trace_crossings(t)) {
          CHECK(compute_crossings(s.d).cross(t.chords[i].edge, t.chords[j].edge));
        }
      }
    }
  }
}

TEST_CASE("chord interleaving") {
  CHECK(chords_interleave(1, 3, 2, 4));
  CHECK_FALSE(chords_interleave(1, 2, 3, 4));
  CHECK_FALSE(chords_interleave(1, 4, 2, 3));
  CHECK(chords_interleave(3, 1, 4, 2));
  CHECK_FALSE(chords_interleave(1, 3, 3, 5));
}

TEST_CASE("planarity") {
  CHECK(is_planar(complete(4)).planar);
  PlanarityResult k5 = is_planar(complete(5));
  CHECK_FALSE(k5.planar);
  CHECK_FALSE(k5.kuratowski.empty());
  AbstractGraph k33{6, {}};
  for (std::size_t u = 0; u < 3; ++u) {
    for (std::size_t v = 3; v < 6; ++v) k33.edges.emplace_back(u, v);
  }
  CHECK_FALSE(is_planar(k33).planar);
  CHECK(is_planar(AbstractGraph{0, {}}).planar);
  CHECK_THROWS_AS(require_simple(AbstractGraph{2, {{0, 1}, {1, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(require_simple(AbstractGraph{2, {{1, 1}}}), std::invalid_argument);
}

TEST_CASE("dense graphs are never planar") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    std::size_t n = 5 + rng() % 20;
    AbstractGraph all = complete(n);
    std::shuffle(all.edges.begin(), all.edges.end(), rng);
    all.edges.resize(3 * n - 5 + rng() % (all.edges.size() - (3 * n - 5) + 1));
    CHECK_FALSE(is_planar(all).planar);
  }
}

TEST_CASE("four colouring") {
  Coloring k4 = four_color(complete(4));
  CHECK(is_proper(complete(4), k4));
  CHECK(std::set<int>(k4.colors.begin(), k4.colors.end()).size() == 4);

  AbstractGraph cycle{10, {}};
  for (std::size_t v = 0; v < 10; ++v) cycle.edges.emplace_back(v, (v + 1) % 10);
  Coloring c = four_color(cycle);
  CHECK(is_proper(cycle, c));
  for (int x : c.colors) CHECK((x >= 1 && x <= 4));

  std::mt19937_64 rng(200);
  AbstractGraph t = stacked_triangulation(200, rng);
  REQUIRE(t.edges.size() == 3 * 200 - 6);
  REQUIRE(is_planar(t).planar);
  Coloring tc = four_color(t);
  for (auto [u, v] : t.edges) CHECK(tc.colors[u] != tc.colors[v]);
  for (int x : tc.colors) CHECK((x >= 1 && x <= 4));
}

}  // TEST_SUITE
