// Property checkers over a validated drawing.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pcc/drawing.hpp"

namespace pcc {

class CapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr unsigned kMaxFamilySize = 12;
inline constexpr unsigned kMaxGridSize = 8;

enum class PccViolationReason { AdjacentCrossing, NotPlanarlyConnected };

const char* to_string(PccViolationReason reason);

struct PccViolation {
  EdgeIndex first = 0;
  EdgeIndex second = 0;
  PccViolationReason reason = PccViolationReason::NotPlanarlyConnected;

  friend bool operator==(const PccViolation&, const PccViolation&) = default;
};

struct PccReport {
  bool holds = true;
  std::vector<PccViolation> violations;

  friend bool operator==(const PccReport&, const PccReport&) = default;
};

/// Every independent crossing pair must be joined by a crossing-free edge.
/// With require_independent set, crossing pairs sharing a vertex are
/// violations (the certificate hypothesis); otherwise they are
/// skipped.
PccReport check_pcc(const Drawing& d, bool require_independent);

/// Like check_pcc, but the connector may be a path of at most k crossing-free
/// edges. Pairs sharing a vertex are connected by the empty path, so k = 0
/// demands that every crossing pair be adjacent.
PccReport check_k_pcc(const Drawing& d, unsigned k);

struct CrossingFamily {
  std::vector<EdgeIndex> edges;
};

/// k pairwise crossing edges (a k-clique of the crossing graph), or nullopt.
/// Throws CapExceeded for k > kMaxFamilySize.
std::optional<CrossingFamily> find_pairwise_crossing(const Drawing& d, unsigned k);

enum class GridOutcome { Found, NotFound, BudgetExhausted };

const char* to_string(GridOutcome outcome);

struct GridSearchResult {
  GridOutcome outcome = GridOutcome::NotFound;
  std::vector<EdgeIndex> first;   // E1
  std::vector<EdgeIndex> second;  // E2
  std::uint64_t nodes = 0;
};

/// Branch-and-bound search for a k-grid whose 4k endpoints are distinct.
/// Throws CapExceeded for k > kMaxGridSize.
GridSearchResult find_grid(const Drawing& d, unsigned k, std::uint64_t budget);

}  // namespace pcc
