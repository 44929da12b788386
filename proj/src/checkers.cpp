#include "pcc/checkers.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

#include "pcc/clique.hpp"

namespace pcc {

const char* to_string(PccViolationReason reason) {
  switch (reason) {
    case PccViolationReason::AdjacentCrossing: return "AdjacentCrossing";
    case PccViolationReason::NotPlanarlyConnected: return "NotPlanarlyConnected";
  }
  return "?";
}

const char* to_string(GridOutcome outcome) {
  switch (outcome) {
    case GridOutcome::Found: return "Found";
    case GridOutcome::NotFound: return "NotFound";
    case GridOutcome::BudgetExhausted: return "BudgetExhausted";
  }
  return "?";
}

PccReport check_pcc(const Drawing& d, bool require_independent) {
  const CrossingSet& cs = d.crossings();
  PccReport report;
  auto planar_edge = [&](VertexIndex a, VertexIndex b) {
    auto e = d.edge_between(a, b);
    return e && cs.degree(*e) == 0;
  };
  for (const CrossingPair& p : cs.pairs()) {
    if (d.adjacent(p.first, p.second)) {
      if (require_independent) {
        report.violations.push_back(
            {p.first, p.second, PccViolationReason::AdjacentCrossing});
      }
      continue;
    }
    const VertexIndex ends_e[2] = {d.source(p.first), d.target(p.first)};
    const VertexIndex ends_f[2] = {d.source(p.second), d.target(p.second)};
    bool connected = false;
    for (VertexIndex a : ends_e) {
      for (VertexIndex b : ends_f) connected = connected || planar_edge(a, b);
    }
    if (!connected) {
      report.violations.push_back(
          {p.first, p.second, PccViolationReason::NotPlanarlyConnected});
    }
  }
  report.holds = report.violations.empty();
  return report;
}

PccReport check_k_pcc(const Drawing& d, unsigned k) {
  const CrossingSet& cs = d.crossings();
  const std::size_t n = d.vertex_count();
  std::vector<std::vector<VertexIndex>> skeleton(n);
  for (EdgeIndex e = 0; e < d.edge_count(); ++e) {
    if (cs.degree(e) != 0) continue;
    skeleton[d.source(e)].push_back(d.target(e));
    skeleton[d.target(e)].push_back(d.source(e));
  }

  PccReport report;
  std::vector<unsigned> dist(n);
  constexpr unsigned kUnreached = ~0u;
  // Pairs are grouped by their first edge so one bounded BFS serves all of
  // that edge's partners.
  EdgeIndex bfs_edge = static_cast<EdgeIndex>(-1);
  for (const CrossingPair& p : cs.pairs()) {
    if (d.adjacent(p.first, p.second)) continue;
    if (p.first != bfs_edge) {
      bfs_edge = p.first;
      std::fill(dist.begin(), dist.end(), kUnreached);
      std::deque<VertexIndex> queue;
      for (VertexIndex s : {d.source(p.first), d.target(p.first)}) {
        dist[s] = 0;
        queue.push_back(s);
      }
      while (!queue.empty()) {
        VertexIndex v = queue.front();
        queue.pop_front();
        if (dist[v] == k) continue;
        for (VertexIndex w : skeleton[v]) {
          if (dist[w] != kUnreached) continue;
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    if (dist[d.source(p.second)] == kUnreached &&
        dist[d.target(p.second)] == kUnreached) {
      report.violations.push_back(
          {p.first, p.second, PccViolationReason::NotPlanarlyConnected});
    }
  }
  report.holds = report.violations.empty();
  return report;
}

std::optional<CrossingFamily> find_pairwise_crossing(const Drawing& d, unsigned k) {
  if (k > kMaxFamilySize) {
    throw CapExceeded("pairwise crossing search is capped at k = " +
                      std::to_string(kMaxFamilySize));
  }
  const CrossingSet& cs = d.crossings();
  BitGraph g(d.edge_count());
  for (const CrossingPair& p : cs.pairs()) g.add_edge(p.first, p.second);
  auto clique = find_clique(g, k);
  if (!clique) return std::nullopt;
  return CrossingFamily{std::move(*clique)};
}

namespace {

class GridSearch {
 public:
  GridSearch(const Drawing& d, unsigned k, std::uint64_t budget)
      : d_(d), cs_(d.crossings()), k_(k), budget_(budget),
        used_(d.vertex_count(), 0), active_(d.edge_count(), true) {}

  GridSearchResult run() {
    prune_core();
    GridSearchResult result;
    bool found = false;
    for (EdgeIndex e = 0; e < d_.edge_count() && !found && !exhausted_; ++e) {
      if (!active_[e]) continue;
      std::vector<EdgeIndex> common;
      for (EdgeIndex f : cs_.neighbors(e)) {
        if (f > e && active_[f] && !d_.adjacent(e, f)) common.push_back(f);
      }
      found = choose(e, std::move(common));
    }
    result.nodes = nodes_;
    if (found) {
      result.outcome = GridOutcome::Found;
      result.first = first_;
      result.second = second_;
    } else {
      result.outcome = exhausted_ ? GridOutcome::BudgetExhausted : GridOutcome::NotFound;
    }
    return result;
  }

 private:
  // Every grid edge crosses at least k grid edges of the other side.
  void prune_core() {
    std::vector<std::size_t> deg(d_.edge_count());
    for (EdgeIndex e = 0; e < d_.edge_count(); ++e) deg[e] = cs_.degree(e);
    std::deque<EdgeIndex> queue;
    for (EdgeIndex e = 0; e < d_.edge_count(); ++e) {
      if (deg[e] < k_) {
        active_[e] = false;
        queue.push_back(e);
      }
    }
    while (!queue.empty()) {
      EdgeIndex e = queue.front();
      queue.pop_front();
      for (EdgeIndex f : cs_.neighbors(e)) {
        if (!active_[f]) continue;
        if (--deg[f] < k_) {
          active_[f] = false;
          queue.push_back(f);
        }
      }
    }
  }

  bool touches_used(EdgeIndex e) const {
    return used_[d_.source(e)] != 0 || used_[d_.target(e)] != 0;
  }

  void mark(EdgeIndex e, int delta) {
    used_[d_.source(e)] += delta;
    used_[d_.target(e)] += delta;
  }

  bool tick() {
    if (++nodes_ > budget_) exhausted_ = true;
    return !exhausted_;
  }

  // Greedy vertex cover of the edges not touching used vertices: an upper
  // bound on how many pairwise vertex-disjoint edges they contain.
  std::size_t disjoint_bound(const std::vector<EdgeIndex>& edges, std::size_t from,
                             std::size_t need) const {
    std::vector<EdgeIndex> rest;
    for (std::size_t i = from; i < edges.size(); ++i) {
      if (!touches_used(edges[i])) rest.push_back(edges[i]);
    }
    if (rest.size() < need) return rest.size();
    std::size_t cover = 0;
    std::vector<bool> gone(rest.size(), false);
    std::size_t left = rest.size();
    std::unordered_map<VertexIndex, std::size_t> deg;
    for (EdgeIndex e : rest) {
      ++deg[d_.source(e)];
      ++deg[d_.target(e)];
    }
    while (left > 0) {
      if (cover >= need) return cover;
      VertexIndex best = 0;
      std::size_t best_deg = 0;
      for (const auto& [v, c] : deg) {
        if (c > best_deg || (c == best_deg && c > 0 && v < best)) {
          best = v;
          best_deg = c;
        }
      }
      ++cover;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (gone[i]) continue;
        EdgeIndex e = rest[i];
        if (d_.source(e) == best || d_.target(e) == best) {
          gone[i] = true;
          --left;
          --deg[d_.source(e)];
          --deg[d_.target(e)];
        }
      }
    }
    return cover;
  }

  // Adds e to E1; `common` are the edges crossing every E1 member, larger
  // than the first E1 member, and disjoint from E1's endpoints.
  bool choose(EdgeIndex e, std::vector<EdgeIndex> common) {
    if (!tick()) return false;
    first_.push_back(e);
    mark(e, +1);
    bool found = false;
    std::vector<EdgeIndex> filtered;
    for (EdgeIndex f : common) {
      if (!touches_used(f)) filtered.push_back(f);
    }
    if (disjoint_bound(filtered, 0, k_) >= k_) {
      if (first_.size() == k_) {
        found = pick_second(filtered, 0);
      } else {
        found = extend_first(filtered);
      }
    }
    if (!found) {
      mark(e, -1);
      first_.pop_back();
    }
    return found;
  }

  bool extend_first(const std::vector<EdgeIndex>& common) {
    const std::size_t need = k_ - first_.size();
    std::vector<EdgeIndex> candidates;
    std::vector<std::vector<EdgeIndex>> next_common;
    for (EdgeIndex e = first_.back() + 1; e < d_.edge_count(); ++e) {
      if (!active_[e] || touches_used(e)) continue;
      std::vector<EdgeIndex> shared;
      for (EdgeIndex f : common) {
        if (cs_.cross(e, f) && !d_.adjacent(e, f)) shared.push_back(f);
      }
      if (shared.size() < k_) continue;
      candidates.push_back(e);
      next_common.push_back(std::move(shared));
    }
    if (disjoint_bound(candidates, 0, need) < need) return false;
    for (std::size_t i = 0; i < candidates.size() && !exhausted_; ++i) {
      if (touches_used(candidates[i])) continue;
      if (choose(candidates[i], std::move(next_common[i]))) return true;
    }
    return false;
  }

  bool pick_second(const std::vector<EdgeIndex>& pool, std::size_t from) {
    if (second_.size() == k_) return true;
    if (!tick()) return false;
    const std::size_t need = k_ - second_.size();
    if (disjoint_bound(pool, from, need) < need) return false;
    for (std::size_t i = from; i < pool.size() && !exhausted_; ++i) {
      EdgeIndex f = pool[i];
      if (touches_used(f)) continue;
      second_.push_back(f);
      mark(f, +1);
      if (pick_second(pool, i + 1)) return true;
      mark(f, -1);
      second_.pop_back();
    }
    return false;
  }

  const Drawing& d_;
  const CrossingSet& cs_;
  std::size_t k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<int> used_;
  std::vector<bool> active_;
  std::vector<EdgeIndex> first_;
  std::vector<EdgeIndex> second_;
};

}  // namespace

GridSearchResult find_grid(const Drawing& d, unsigned k, std::uint64_t budget) {
  if (k > kMaxGridSize) {
    throw CapExceeded("grid search is capped at k = " + std::to_string(kMaxGridSize));
  }
  if (k == 0) return {GridOutcome::Found, {}, {}, 0};
  return GridSearch(d, k, budget).run();
}

}  // namespace pcc
