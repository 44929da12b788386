#include "pcc/certificate.hpp"

#include <algorithm>
#include <sstream>

#include "pcc/clique.hpp"

namespace pcc {

namespace {

std::uint64_t choose2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

template <typename... Parts>
[[noreturn]] void violation(const Parts&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  throw LemmaViolation(out.str());
}

void check_face(const FaceRecord& f) {
  const auto where = [&] {
    std::ostringstream o;
    o << "component " << f.component << " face " << f.face;
    return o.str();
  };
  if (!f.trace_consistent) {
    violation(where(), ": interleaving chords whose edges do not cross");
  }
  if (f.max_family > kFaceFamilyCap) {
    violation(where(), ": ", f.max_family, " pairwise crossing edges");
  }
  if (f.cp_bound != capoyleas_pach_bound(f.size, kFaceFamilyCap) ||
      f.crossed_edges > f.cp_bound) {
    violation(where(), ": |E''(f)| = ", f.crossed_edges, " exceeds CP(", f.size,
              ", 8) = ", f.cp_bound);
  }
  if (f.coarse_bound != 16 * f.size || f.crossed_edges > f.coarse_bound) {
    violation(where(), ": |E''(f)| = ", f.crossed_edges, " exceeds 16|f| = ",
              16 * f.size);
  }
}

void check_component(const ComponentRecord& c) {
  if (c.face_size_sum != 2 * c.planar_edges) {
    violation("component ", c.component, ": face sizes sum to ", c.face_size_sum,
              ", expected 2|E'_i| = ", 2 * c.planar_edges);
  }
  // Euler's formula for a connected plane graph.
  if (c.vertices + c.faces != c.planar_edges + 2) {
    violation("component ", c.component, ": Euler check failed (V=", c.vertices,
              " E=", c.planar_edges, " F=", c.faces, ")");
  }
  if (c.intra_edges > c.cp_sum || c.cp_sum > c.coarse_sum ||
      c.coarse_sum != 32 * c.planar_edges || c.coarse_sum > c.bound ||
      c.bound != 96 * c.vertices) {
    violation("component ", c.component, ": chain |E''_ii| = ", c.intra_edges,
              " <= ", c.cp_sum, " <= ", c.coarse_sum, " <= 96|V_i| = ", 96 * c.vertices,
              " broken");
  }
}

void check_pair(const PairRecord& p) {
  std::uint64_t audited = 0;
  for (const GStarAudit& a : p.audits) {
    if (!a.crossing_free || !a.bipartite || a.edges > a.bound()) {
      violation("pair (", p.i, ", ", p.j, ") colours (", a.color_left, ", ",
                a.color_right, "): G* with ", a.edges, " edges, bound ", a.bound(),
                a.crossing_free ? "" : ", has crossings",
                a.bipartite ? "" : ", not bipartite");
    }
    audited += a.edges;
  }
  if (audited != p.edges) {
    violation("pair (", p.i, ", ", p.j, "): G* audits cover ", audited, " of ",
              p.edges, " edges");
  }
  if (p.edges > p.bound()) {
    violation("pair (", p.i, ", ", p.j, "): |E''_ij| = ", p.edges,
              " exceeds 8(|V_ij| + |V_ji|) = ", p.bound());
  }
}

void check_sum(const SumRecord& s) {
  std::uint64_t audited = 0;
  for (const HcAudit& a : s.audits) {
    if (!a.planar || a.edges > 3 * a.vertices) {
      violation("component ", s.component, " colour ", a.color, ": H^c with ", a.edges,
                " edges on ", a.vertices, " vertices", a.planar ? "" : ", not planar");
    }
    audited += a.edges;
  }
  if (audited != s.boundary_sum) {
    violation("component ", s.component, ": H^c audits cover ", audited, " of ",
              s.boundary_sum, " boundary incidences");
  }
  if (s.boundary_sum > s.bound()) {
    violation("component ", s.component, ": sum |V_ij| = ", s.boundary_sum,
              " exceeds 3|V_i| + 12 deg_H = ", s.bound());
  }
}

void check_totals(const Certificate& cert) {
  const Totals& t = cert.totals;
  if (!cert.h.planar) violation("component graph H is not planar");
  if (t.edges != t.planar_edges + t.crossed_edges) {
    violation("|E| != |E'| + |E''|");
  }
  if (t.crossed_edges != t.intra_edges + t.inter_edges) {
    violation("|E''| = ", t.crossed_edges, " but intra + inter = ",
              t.intra_edges + t.inter_edges);
  }
  if (t.planar_edges > t.planar_bound()) violation("|E'| exceeds 3n");
  if (t.intra_edges > t.intra_bound()) violation("sum |E''_ii| exceeds 96n");
  if (t.inter_edges > 8 * t.boundary_sum) {
    violation("sum |E''_ij| exceeds 8 sum |V_ij|");
  }
  if (t.boundary_sum > 3 * t.n + 24 * t.h_edges) {
    violation("sum |V_ij| exceeds 3n + 24|E(H)|");
  }
  if (t.h_edges > 3 * cert.h.vertices || cert.h.vertices > t.n) {
    violation("|E(H)| exceeds 3|V(H)|");
  }
  if (t.intra_edges + 8 * t.boundary_sum > 120 * t.n + 192 * t.h_edges) {
    violation("|E''| <= 120n + 192|E(H)| broken");
  }
  if (t.crossed_edges > t.crossed_bound()) violation("|E''| exceeds 696n");
  if (t.edges > t.total_bound()) violation("|E| exceeds 699n");
}

}  // namespace

std::uint64_t capoyleas_pach_bound(std::uint64_t n, std::uint64_t k) {
  if (n <= 2 * k + 1) return choose2(n);
  return 2 * k * n - choose2(2 * k + 1);
}

IntraAudit verify_intra(const Drawing& d, const Decomposition& dec,
                        const std::vector<FaceAssignment>& faces) {
  const CrossingSet& cs = d.crossings();
  IntraAudit out;
  for (std::size_t i = 0; i < dec.components.size(); ++i) {
    const FaceAssignment& fa = faces.at(i);
    ComponentRecord comp;
    comp.component = i;
    comp.vertices = dec.components[i].vertices.size();
    comp.planar_edges = dec.components[i].planar_edges.size();
    comp.faces = fa.faces.size();
    comp.intra_edges = dec.intra[i].size();
    comp.bound = 96 * comp.vertices;
    for (std::size_t f = 0; f < fa.faces.size(); ++f) {
      const ConvexTrace& trace = fa.traces[f];
      FaceRecord rec;
      rec.component = i;
      rec.face = f;
      rec.size = fa.faces[f].size();
      rec.crossed_edges = trace.chords.size();
      rec.cp_bound = capoyleas_pach_bound(rec.size, kFaceFamilyCap);
      rec.coarse_bound = 16 * rec.size;
      BitGraph interleave(trace.chords.size());
      for (auto [a, b] : trace_crossings(trace)) {
        interleave.add_edge(a, b);
        if (!cs.cross(trace.chords[a].edge, trace.chords[b].edge)) {
          rec.trace_consistent = false;
        }
      }
      rec.max_family = max_clique_size(interleave, kFaceFamilyCap + 1);
      check_face(rec);
      comp.face_size_sum += rec.size;
      comp.cp_sum += rec.cp_bound;
      comp.coarse_sum += rec.coarse_bound;
      out.faces.push_back(rec);
    }
    check_component(comp);
    out.components.push_back(comp);
  }
  return out;
}

AbstractGraph build_H(const Decomposition& dec) {
  AbstractGraph h;
  h.vertex_count = dec.components.size();
  for (const auto& [key, edges] : dec.inter) {
    if (!edges.empty()) h.edges.push_back(key);
  }
  return h;
}

std::vector<PairRecord> verify_inter(const Drawing& d, const Decomposition& dec,
                                     const Coloring& coloring) {
  const CrossingSet& cs = d.crossings();
  const auto& color = coloring.colors;
  std::vector<PairRecord> out;
  for (const auto& [key, edges] : dec.inter) {
    const auto [i, j] = key;
    PairRecord rec;
    rec.i = i;
    rec.j = j;
    rec.edges = edges.size();
    const auto& vij = dec.boundary_of(i, j);
    const auto& vji = dec.boundary_of(j, i);
    rec.boundary_i = vij.size();
    rec.boundary_j = vji.size();
    for (int c = 1; c <= 4; ++c) {
      for (int c2 = 1; c2 <= 4; ++c2) {
        GStarAudit a;
        a.color_left = c;
        a.color_right = c2;
        a.left = std::count_if(vij.begin(), vij.end(),
                               [&](VertexIndex v) { return color[v] == c; });
        a.right = std::count_if(vji.begin(), vji.end(),
                                [&](VertexIndex v) { return color[v] == c2; });
        std::vector<EdgeIndex> gstar;
        for (EdgeIndex e : edges) {
          VertexIndex u = d.source(e), v = d.target(e);
          if (dec.component_of[u] != i) std::swap(u, v);
          if (color[u] == c && color[v] == c2) {
            gstar.push_back(e);
            // Sides lie in different components, so every edge joins the two
            // colour classes.
            a.bipartite = a.bipartite && dec.component_of[u] == i &&
                          dec.component_of[v] == j &&
                          std::binary_search(vij.begin(), vij.end(), u) &&
                          std::binary_search(vji.begin(), vji.end(), v);
          }
        }
        a.edges = gstar.size();
        for (std::size_t x = 0; x < gstar.size() && a.crossing_free; ++x) {
          for (std::size_t y = x + 1; y < gstar.size(); ++y) {
            if (cs.cross(gstar[x], gstar[y])) {
              a.crossing_free = false;
              break;
            }
          }
        }
        rec.audits.push_back(a);
      }
    }
    check_pair(rec);
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<SumRecord> verify_sum(const Decomposition& dec, const AbstractGraph& h,
                                  const Coloring& coloring) {
  const auto& color = coloring.colors;
  std::vector<std::vector<std::size_t>> h_adj(h.vertex_count);
  for (auto [a, b] : h.edges) {
    h_adj[a].push_back(b);
    h_adj[b].push_back(a);
  }
  std::vector<SumRecord> out;
  for (std::size_t i = 0; i < dec.components.size(); ++i) {
    std::sort(h_adj[i].begin(), h_adj[i].end());
    SumRecord rec;
    rec.component = i;
    rec.vertices = dec.components[i].vertices.size();
    rec.degree_h = h_adj[i].size();
    for (std::size_t j : h_adj[i]) rec.boundary_sum += dec.boundary_of(i, j).size();
    for (int c = 1; c <= 4; ++c) {
      // H^c: colour-c vertices of component i, then one vertex per
      // neighbouring component.
      std::vector<VertexIndex> own;
      for (VertexIndex v : dec.components[i].vertices) {
        if (color[v] == c) own.push_back(v);
      }
      AbstractGraph hc;
      hc.vertex_count = own.size() + h_adj[i].size();
      for (std::size_t k = 0; k < h_adj[i].size(); ++k) {
        for (VertexIndex v : dec.boundary_of(i, h_adj[i][k])) {
          if (color[v] != c) continue;
          auto pos = std::lower_bound(own.begin(), own.end(), v) - own.begin();
          hc.edges.emplace_back(static_cast<std::size_t>(pos), own.size() + k);
        }
      }
      HcAudit a;
      a.component = i;
      a.color = c;
      a.vertices = hc.vertex_count;
      a.edges = hc.edges.size();
      a.planar = is_planar(hc).planar;
      rec.audits.push_back(a);
    }
    check_sum(rec);
    out.push_back(std::move(rec));
  }
  return out;
}

void audit(const Certificate& cert) {
  if (!cert.hypothesis_ok) violation("hypothesis does not hold");
  for (const FaceRecord& f : cert.faces) check_face(f);
  for (const ComponentRecord& c : cert.components) check_component(c);
  for (const PairRecord& p : cert.pairs) check_pair(p);
  for (const SumRecord& s : cert.sums) check_sum(s);
  check_totals(cert);
}

bool Certificate::valid() const {
  try {
    audit(*this);
  } catch (const LemmaViolation&) {
    return false;
  }
  return true;
}

Certificate certify(const Drawing& d) {
  Certificate cert;
  cert.hypothesis = check_pcc(d, /*require_independent=*/true);
  cert.hypothesis_ok = cert.hypothesis.holds;
  cert.totals.n = d.vertex_count();
  cert.totals.edges = d.edge_count();
  if (!cert.hypothesis_ok) return cert;

  const EdgePartition part = partition_edges(d, d.crossings());
  const Decomposition dec = decompose(d, part);
  cert.totals.planar_edges = part.planar.size();
  cert.totals.crossed_edges = part.crossed.size();

  std::vector<FaceAssignment> assignments;
  for (std::size_t i = 0; i < dec.components.size(); ++i) {
    assignments.push_back(assign_to_faces(d, dec, i, dec.intra[i]));
  }
  IntraAudit intra = verify_intra(d, dec, assignments);
  cert.components = std::move(intra.components);
  cert.faces = std::move(intra.faces);

  const AbstractGraph h = build_H(dec);
  cert.h = {h.vertex_count, h.edges.size(), is_planar(h).planar};
  if (!cert.h.planar) violation("component graph H is not planar");

  const Coloring coloring = four_color(skeleton_graph(d, part));
  cert.pairs = verify_inter(d, dec, coloring);
  cert.sums = verify_sum(dec, h, coloring);

  for (const auto& intra_edges : dec.intra) cert.totals.intra_edges += intra_edges.size();
  for (const auto& [key, edges] : dec.inter) cert.totals.inter_edges += edges.size();
  for (const SumRecord& s : cert.sums) cert.totals.boundary_sum += s.boundary_sum;
  cert.totals.h_edges = h.edges.size();
  check_totals(cert);
  return cert;
}

}  // namespace pcc
