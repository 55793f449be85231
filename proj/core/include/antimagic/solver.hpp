#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/labeling.hpp"

namespace antimagic {

enum class EdgeOrder { InputOrder, MaxDegreeFirst, ConnectedExpansion };

std::string_view edge_order_name(EdgeOrder order);
std::optional<EdgeOrder> parse_edge_order(std::string_view name);

struct SearchConfig {
  double time_budget_seconds = 600.0;
  std::uint64_t node_budget = UINT64_MAX;
  // Feasibility target; exact_chi_la ignores it.
  std::optional<int> target_colors;
  EdgeOrder edge_order = EdgeOrder::ConnectedExpansion;
  int parallel_width = 1;
  // Known achievable color count (e.g. from a construction). The exact search
  // starts below it instead of below p.
  std::optional<int> upper_bound_hint;
  // Force increasing labels across pendants hanging off the same vertex, and
  // on friendship coronas also across the triangles and within each triangle.
  bool symmetry_breaking = true;

  // Throws DomainError on non-positive budgets or width.
  void validate() const;
};

enum class SearchStatus { Exact, Feasible, Infeasible, BudgetExhausted };

std::string_view search_status_name(SearchStatus s);

struct SearchOutcome {
  SearchStatus status = SearchStatus::BudgetExhausted;
  // Exact: chi. Infeasible: the k that was refuted. Otherwise the color
  // count of the certificate, if any.
  int colors = 0;
  // Present for Exact and Feasible; best incumbent for BudgetExhausted.
  std::optional<Certificate> certificate;
  std::uint64_t nodes_explored = 0;
  double wall_seconds = 0.0;
};

// Minimum number of induced colors over all local antimagic labelings of g,
// by branch and bound. g must be connected with q >= 2.
SearchOutcome exact_chi_la(const Graph& g, const SearchConfig& cfg = {});

// Some local antimagic labeling with at most k colors, or a proof by
// exhaustion that none exists. Requires 2 <= k <= p.
SearchOutcome feasible_with_k_colors(const Graph& g, int k, const SearchConfig& cfg = {});

// Snapshot of a partial assignment, for inspecting the pruning bound.
struct PartialAssignment {
  // labels[e] == 0 marks an unlabeled edge.
  std::vector<Label> labels;
};

inline constexpr int kPruned = INT32_MAX;

// Admissible lower bound on the color count of every completion of `state`;
// kPruned when two adjacent fully-labeled vertices already share a weight.
int lower_bound_prune(const Graph& g, const PartialAssignment& state);

// Pairs (a, b) asking label(a) < label(b), valid because some automorphism
// of g maps every labeling to one satisfying all of them. Non-empty only for
// graphs that are exactly friendship_corona(n, m).
std::vector<std::pair<EdgeId, EdgeId>> automorphism_order_constraints(const Graph& g);

// Edge visiting order used by the search.
std::vector<EdgeId> search_edge_order(const Graph& g, EdgeOrder order);

}  // namespace antimagic
