// Dense bitset graphs and a branch-and-bound clique search. Shared by the
// crossing-family checker and by the per-face audits of the certifier.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace pcc {

class BitGraph {
 public:
  explicit BitGraph(std::size_t n = 0);

  std::size_t size() const { return n_; }
  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;
  std::size_t degree(std::size_t v) const;
  const std::vector<std::uint64_t>& row(std::size_t v) const { return rows_[v]; }
  std::size_t words() const { return words_; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

/// The lexicographically first k-clique (ascending vertex order), if any.
/// Pruning uses a k-core restriction and a greedy coloring bound; the search
/// order is by vertex index so the witness is reproducible.
std::optional<std::vector<std::size_t>> find_clique(const BitGraph& g, std::size_t k);

/// Size of a maximum clique, searching no further than `cap`.
std::size_t max_clique_size(const BitGraph& g, std::size_t cap);

}  // namespace pcc
