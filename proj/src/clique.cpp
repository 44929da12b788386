#include "pcc/clique.hpp"

#include <bit>
#include <stdexcept>

namespace pcc {

namespace {

using Bits = std::vector<std::uint64_t>;

bool test(const Bits& b, std::size_t i) { return (b[i >> 6] >> (i & 63)) & 1u; }
void set(Bits& b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
void reset(Bits& b, std::size_t i) { b[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

std::size_t count(const Bits& b) {
  std::size_t c = 0;
  for (auto w : b) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

class CliqueSearch {
 public:
  CliqueSearch(const BitGraph& g, std::size_t k) : g_(g), k_(k) {}

  std::optional<std::vector<std::size_t>> run() {
    Bits alive(g_.words(), 0);
    for (std::size_t v = 0; v < g_.size(); ++v) set(alive, v);
    // k-core: a member of a k-clique has k-1 neighbours inside the clique.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t v = 0; v < g_.size(); ++v) {
        if (!test(alive, v)) continue;
        std::size_t d = 0;
        const Bits& r = g_.row(v);
        for (std::size_t w = 0; w < r.size(); ++w) {
          d += static_cast<std::size_t>(std::popcount(r[w] & alive[w]));
        }
        if (d + 1 < k_) {
          reset(alive, v);
          changed = true;
        }
      }
    }
    std::vector<std::size_t> chosen;
    if (expand(chosen, alive)) return chosen;
    return std::nullopt;
  }

 private:
  // Number of colour classes in a greedy colouring of the candidate set;
  // an upper bound on any clique inside it.
  std::size_t colour_bound(const Bits& cand, std::size_t needed) const {
    Bits uncoloured = cand;
    std::size_t colours = 0;
    while (count(uncoloured) > 0) {
      ++colours;
      if (colours >= needed) return colours;
      Bits q = uncoloured;
      for (std::size_t w = 0; w < q.size(); ++w) {
        while (q[w] != 0) {
          std::size_t bit = static_cast<std::size_t>(std::countr_zero(q[w]));
          std::size_t v = (w << 6) | bit;
          reset(uncoloured, v);
          q[w] &= q[w] - 1;
          const Bits& r = g_.row(v);
          for (std::size_t x = w; x < q.size(); ++x) q[x] &= ~r[x];
        }
      }
    }
    return colours;
  }

  bool expand(std::vector<std::size_t>& chosen, const Bits& cand) {
    if (chosen.size() == k_) return true;
    const std::size_t needed = k_ - chosen.size();
    if (count(cand) < needed) return false;
    if (colour_bound(cand, needed) < needed) return false;
    Bits rest = cand;
    for (std::size_t w = 0; w < rest.size(); ++w) {
      while (rest[w] != 0) {
        std::size_t bit = static_cast<std::size_t>(std::countr_zero(rest[w]));
        std::size_t v = (w << 6) | bit;
        rest[w] &= rest[w] - 1;
        if (count(rest) + 1 < needed) return false;
        Bits next(rest.size(), 0);
        const Bits& r = g_.row(v);
        for (std::size_t x = 0; x < next.size(); ++x) next[x] = rest[x] & r[x];
        chosen.push_back(v);
        if (expand(chosen, next)) return true;
        chosen.pop_back();
      }
    }
    return false;
  }

  const BitGraph& g_;
  std::size_t k_;
};

}  // namespace

BitGraph::BitGraph(std::size_t n)
    : n_(n), words_((n + 63) / 64), rows_(n, std::vector<std::uint64_t>(words_, 0)) {}

void BitGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw std::invalid_argument("BitGraph: loop");
  set(rows_[u], v);
  set(rows_[v], u);
}

bool BitGraph::has_edge(std::size_t u, std::size_t v) const { return test(rows_[u], v); }

std::size_t BitGraph::degree(std::size_t v) const { return count(rows_[v]); }

std::optional<std::vector<std::size_t>> find_clique(const BitGraph& g, std::size_t k) {
  if (k == 0) return std::vector<std::size_t>{};
  return CliqueSearch(g, k).run();
}

std::size_t max_clique_size(const BitGraph& g, std::size_t cap) {
  std::size_t best = 0;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (!find_clique(g, k)) break;
    best = k;
  }
  return best;
}

}  // namespace pcc
