// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pcc/certificate.hpp"
#include "pcc/checkers.hpp"
#include "pcc/construct.hpp"
#include "pcc/io.hpp"
#include "pcc/planar.hpp"
#include "support.hpp"

using namespace pcc;

namespace {

// Tolerances. Every criterion is exact; these pin the corpus sizes and the
// search budget the criteria are stated for.
constexpr std::size_t kConstructionFirst = 10;
constexpr std::size_t kConstructionLast = 120;
constexpr std::size_t kGridConstructionLast = 40;
constexpr std::uint64_t kGridBudget = 10'000'000;
constexpr std::size_t kRandomDrawings = 200;
constexpr std::size_t kRandomMaxVertices = 40;
constexpr std::size_t kTriangulations = 500;
constexpr std::uint64_t kCpMaxPoints = 9;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void run(int id, const char* title, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("criterion %2d %s  %s  (%s; %.1fs)\n", id, o.pass ? "PASS" : "FAIL", title,
              o.detail.c_str(), secs);
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

struct Named {
  std::string name;
  Drawing drawing;
};

std::vector<Named> certified_corpus() {
  std::vector<Named> out;
  for (std::size_t n = kConstructionFirst; n <= kConstructionLast; ++n) {
    out.push_back({"construction(" + std::to_string(n) + ")", validated(toth_construction(n))});
  }
  for (const char* f : {"convex_k4", "convex_k5", "two_comp_cross", "three_components"}) {
    out.push_back({f, test::fixture(f)});
  }
  for (std::size_t s = 0; s < kRandomDrawings; ++s) {
    std::size_t n = 5 + s % (kRandomMaxVertices - 4);
    out.push_back({"random(" + std::to_string(n) + "," + std::to_string(1000 + s) + ")",
                   validated(random_pcc_greedy(n, kUnlimited, {1000 + s}))});
  }
  return out;
}

// Largest set of chords on n convex points (hull edges included) with no
// three pairwise interleaving, by exhaustive branch and bound.
std::uint64_t max_convex_chords(std::uint64_t n) {
  if (n < 2) return 0;
  std::vector<std::pair<int, int>> diag;
  for (int i = 0; i < static_cast<int>(n); ++i) {
    for (int j = i + 2; j < static_cast<int>(n); ++j) {
      if (i == 0 && j == static_cast<int>(n) - 1) continue;
      diag.emplace_back(i, j);
    }
  }
  const std::size_t m = diag.size();
  std::vector<std::uint64_t> cross(m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      auto [i, j] = diag[a];
      auto [k, l] = diag[b];
      bool k_in = i < k && k < j, l_in = i < l && l < j;
      bool shares = i == k || i == l || j == k || j == l;
      if (!shares && k_in != l_in) cross[a] |= std::uint64_t{1} << b;
    }
  }
  std::size_t best = 0;
  std::function<void(std::size_t, std::uint64_t, std::size_t)> rec =
      [&](std::size_t next, std::uint64_t chosen, std::size_t size) {
        best = std::max(best, size);
        if (next == m || size + (m - next) <= best) return;
        std::uint64_t met = chosen & cross[next];
        bool ok = true;
        for (std::uint64_t rest = met; rest && ok; rest &= rest - 1) {
          int x = std::countr_zero(rest);
          if (cross[x] & met) ok = false;
        }
        if (ok) rec(next + 1, chosen | (std::uint64_t{1} << next), size + 1);
        rec(next + 1, chosen, size);
      };
  rec(0, 0, 0);
  const std::uint64_t hull = n == 2 ? 1 : n;
  return hull + best;
}

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

int main() {
  std::printf("acceptance suite\n");

  run(1, "construction exactness", [] {
    Outcome o;
    for (std::size_t n = kConstructionFirst; n <= kConstructionLast; ++n) {
      // Through the file format, as the command line produces it.
      DrawingData raw = parse_drawing(serialize_drawing(toth_construction(n)));
      auto r = validate_drawing(std::move(raw));
      bool ok = r.drawing && r.drawing->edge_count() == 9 * n - 54 &&
                r.drawing->vertex_count() == n && is_simple(*r.drawing).simple &&
                check_pcc(*r.drawing, true).holds;
      if (!ok) {
        o.pass = false;
        o.detail = "fails at n=" + std::to_string(n);
        return o;
      }
    }
    o.detail = "n=10..120 all have 9n-54 edges, valid, simple, PCC with independent crossings";
    return o;
  });

  std::vector<Named> corpus = certified_corpus();
  std::vector<Certificate> certs;

  run(2, "certificate soundness", [&] {
    Outcome o;
    for (const Named& x : corpus) {
      if (!check_pcc(x.drawing, true).holds) {
        o.pass = false;
        o.detail = x.name + " fails the hypothesis";
        return o;
      }
      try {
        certs.push_back(certify(x.drawing));
      } catch (const LemmaViolation& e) {
        o.pass = false;
        o.detail = x.name + ": " + e.what();
        return o;
      }
      if (!certs.back().valid()) {
        o.pass = false;
        o.detail = x.name + " certificate invalid";
        return o;
      }
    }
    o.detail = std::to_string(corpus.size()) + " drawings certified";
    return o;
  });

  run(3, "bound constants", [&] {
    Outcome o;
    std::size_t checks = 0;
    auto need = [&](bool ok, const std::string& what) {
      ++checks;
      if (!ok && o.pass) {
        o.pass = false;
        o.detail = what;
      }
    };
    for (std::size_t i = 0; i < certs.size(); ++i) {
      const Certificate& c = certs[i];
      const std::string& name = corpus[i].name;
      for (const FaceRecord& f : c.faces) {
        need(f.coarse_bound == 16 * f.size && f.crossed_edges <= 16 * f.size,
             name + " face bound 16|f|");
      }
      for (const ComponentRecord& r : c.components) {
        need(r.bound == 96 * r.vertices && r.intra_edges <= 96 * r.vertices,
             name + " component bound 96|V_i|");
      }
      for (const PairRecord& p : c.pairs) {
        need(p.edges <= 8 * (p.boundary_i + p.boundary_j), name + " pair bound 8(|V_ij|+|V_ji|)");
      }
      for (const SumRecord& s : c.sums) {
        need(s.boundary_sum <= 3 * s.vertices + 12 * s.degree_h,
             name + " boundary sum 3|V_i|+12deg");
      }
      const Totals& t = c.totals;
      need(t.crossed_edges <= 696 * t.n && t.crossed_bound() == 696 * t.n, name + " 696n");
      need(t.edges <= 699 * t.n && t.total_bound() == 699 * t.n, name + " 699n");
      need(t.planar_edges <= 3 * t.n && t.planar_bound() == 3 * t.n, name + " |E'| <= 3n");
    }
    if (o.pass) o.detail = std::to_string(checks) + " inequalities hold";
    return o;
  });

  run(4, "no 9 pairwise crossing edges", [&] {
    Outcome o;
    for (const Named& x : corpus) {
      if (find_pairwise_crossing(x.drawing, 9)) {
        o.pass = false;
        o.detail = "family found in " + x.name;
        return o;
      }
    }
    Drawing k18 = test::fixture("convex_k18");
    auto fam = find_pairwise_crossing(k18, 9);
    if (!fam || fam->edges.size() != 9) {
      o.pass = false;
      o.detail = "no family on convex_k18";
      return o;
    }
    for (std::size_t a = 0; a < 9; ++a) {
      for (std::size_t b = a + 1; b < 9; ++b) {
        if (!test::straight_edges_cross(k18, fam->edges[a], fam->edges[b])) {
          o.pass = false;
          o.detail = "convex_k18 witness edges do not cross";
          return o;
        }
      }
    }
    o.detail = "none in " + std::to_string(corpus.size()) +
               " drawings; convex_k18 witness verified";
    return o;
  });

  run(5, "no 8-grid", [] {
    Outcome o;
    std::uint64_t max_nodes = 0;
    for (std::size_t n = kConstructionFirst; n <= kGridConstructionLast; ++n) {
      GridSearchResult g = find_grid(validated(toth_construction(n)), 8, kGridBudget);
      max_nodes = std::max(max_nodes, g.nodes);
      if (g.outcome != GridOutcome::NotFound) {
        o.pass = false;
        o.detail = "construction(" + std::to_string(n) + "): " + to_string(g.outcome);
        return o;
      }
    }
    GridSearchResult g2 = find_grid(test::fixture("grid_2x2"), 2, kGridBudget);
    if (g2.outcome != GridOutcome::Found) {
      o.pass = false;
      o.detail = "grid_2x2 not found";
      return o;
    }
    o.detail = "construction(10..40) NotFound, max " + std::to_string(max_nodes) +
               " nodes; grid_2x2 found";
    return o;
  });

  run(6, "convex crossing-family bound", [] {
    Outcome o;
    std::ostringstream s;
    for (std::uint64_t n = 1; n <= kCpMaxPoints; ++n) {
      std::uint64_t got = max_convex_chords(n);
      std::uint64_t formula = capoyleas_pach_bound(n, 2);
      std::uint64_t expect = n <= 5 ? n * (n - 1) / 2 : 4 * n - 10;
      s << n << ":" << got << " ";
      if (got != formula || got != expect) {
        o.pass = false;
        o.detail = "n=" + std::to_string(n) + " search " + std::to_string(got) + " formula " +
                   std::to_string(formula);
        return o;
      }
    }
    o.detail = "k=2 maxima " + s.str();
    o.detail.pop_back();
    return o;
  });

  run(7, "face accounting", [&] {
    Outcome o;
    std::size_t comps = 0;
    for (std::size_t i = 0; i < certs.size(); ++i) {
      for (const ComponentRecord& r : certs[i].components) {
        ++comps;
        if (r.face_size_sum != 2 * r.planar_edges ||
            r.vertices + r.faces != r.planar_edges + 2) {
          o.pass = false;
          o.detail = corpus[i].name + " component " + std::to_string(r.component);
          return o;
        }
      }
    }
    o.detail = std::to_string(comps) + " components satisfy sum|f| = 2|E'_i| and Euler";
    return o;
  });

  run(8, "planarity and colouring oracles", [] {
    Outcome o;
    AbstractGraph k5{5, {}};
    for (std::size_t u = 0; u < 5; ++u) {
      for (std::size_t v = u + 1; v < 5; ++v) k5.edges.emplace_back(u, v);
    }
    AbstractGraph k33{6, {}};
    for (std::size_t u = 0; u < 3; ++u) {
      for (std::size_t v = 3; v < 6; ++v) k33.edges.emplace_back(u, v);
    }
    if (is_planar(k5).planar || is_planar(k33).planar) {
      o.pass = false;
      o.detail = "K5 or K3,3 accepted";
      return o;
    }
    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i) {
      std::size_t n = 5 + rng() % 30;
      AbstractGraph g{n, {}};
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
      }
      std::shuffle(g.edges.begin(), g.edges.end(), rng);
      std::size_t keep = 3 * n - 5 + rng() % (g.edges.size() - (3 * n - 5) + 1);
      g.edges.resize(keep);
      if (is_planar(g).planar) {
        o.pass = false;
        o.detail = "dense graph accepted";
        return o;
      }
    }
    for (std::size_t i = 0; i < kTriangulations; ++i) {
      std::size_t n = 4 + rng() % 300;
      AbstractGraph t = stacked_triangulation(n, rng);
      if (!is_planar(t).planar) {
        o.pass = false;
        o.detail = "triangulation rejected";
        return o;
      }
      Coloring c = four_color(t);
      for (auto [u, v] : t.edges) {
        if (c.colors[u] == c.colors[v] || c.colors[u] < 1 || c.colors[u] > 4) {
          o.pass = false;
          o.detail = "improper colouring";
          return o;
        }
      }
    }
    o.detail = "K5, K3,3, 200 dense graphs rejected; 500 triangulations accepted and 4-coloured";
    return o;
  });

  run(9, "2-PCC star drawings", [] {
    Outcome o;
    for (std::size_t n = 3; n <= 10; ++n) {
      Drawing d = validated(star_complete(n, {n}));
      if (!check_k_pcc(d, 2).holds || d.edge_count() != n * (n - 1) / 2) {
        o.pass = false;
        o.detail = "fails at n=" + std::to_string(n);
        return o;
      }
    }
    o.detail = "K_3..K_10 are 2-PCC";
    return o;
  });

  run(10, "empirical density report", [&] {
    Outcome o;
    std::ostringstream s;
    double worst = 0;
    for (std::size_t n : {10, 20, 30, 40}) {
      std::size_t best = 0;
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        best = std::max(best, random_pcc_greedy(n, kUnlimited, {seed}).edges.size());
      }
      worst = std::max(worst, static_cast<double>(best) / n);
      if (best > 699 * n) o.pass = false;
      s << "n=" << n << " greedy " << best << " vs 9n-54 " << 9 * n - 54 << " vs 699n "
        << 699 * n << "; ";
    }
    for (std::size_t i = 0; i < certs.size(); ++i) {
      if (certs[i].totals.edges > 699 * certs[i].totals.n) o.pass = false;
    }
    s << "max greedy density " << worst;
    o.detail = s.str();
    return o;
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
