#include "antimagic/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <limits>
#include <thread>
#include <tuple>

#include "antimagic/errors.hpp"

namespace antimagic {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::array<std::pair<EdgeOrder, std::string_view>, 3> kOrderNames{{
    {EdgeOrder::InputOrder, "input"},
    {EdgeOrder::MaxDegreeFirst, "max-degree"},
    {EdgeOrder::ConnectedExpansion, "connected"},
}};

// Budget shared by every branch of one solver call.
struct Budget {
  Clock::time_point deadline;
  std::uint64_t node_limit;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};

  Budget(double seconds, std::uint64_t limit)
      : deadline(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(seconds))),
        node_limit(limit) {}
};

// Depth-first labeling search over a fixed edge order. Labels are tried in
// increasing order, so the first solution found in a subtree is deterministic.
class Search {
 public:
  Search(const Graph& g, std::vector<EdgeId> order, bool symmetry,
         std::span<const std::pair<EdgeId, EdgeId>> less_than = {})
      : g_(g),
        q_(static_cast<int>(g.size())),
        p_(static_cast<int>(g.order())),
        order_(std::move(order)),
        label_(g.size(), 0),
        used_(g.size() + 2, 0),
        leaf_label_(g.size() + 2, 0),
        weight_(g.order(), 0),
        remaining_(g.order(), 0),
        is_leaf_(g.order(), 0),
        leaf_edge_(g.size(), 0),
        floors_(g.size()),
        ceilings_(g.size()),
        stamp_(static_cast<std::size_t>(q_) * (q_ + 1) / 2 + 2, 0) {
    std::size_t max_degree = 0;
    for (VertexId v = 0; v < g.order(); ++v) {
      remaining_[v] = static_cast<int>(g.degree(v));
      is_leaf_[v] = g.degree(v) == 1;
      max_degree = std::max(max_degree, g.degree(v));
      if (is_leaf_[v]) ++leaves_total_;
    }
    small_prefix_.assign(max_degree + 1, 0);
    large_prefix_.assign(max_degree + 1, 0);
    for (EdgeId e = 0; e < g.size(); ++e) {
      const Edge& ed = g.edge(e);
      leaf_edge_[e] = is_leaf_[ed.u] || is_leaf_[ed.v];
    }
    leaves_open_ = leaves_total_;
    std::vector<std::pair<EdgeId, EdgeId>> pairs(less_than.begin(), less_than.end());
    if (symmetry) {
      const auto chains = pendant_chains();
      pairs.insert(pairs.end(), chains.begin(), chains.end());
    }
    std::vector<std::size_t> position(g.size(), 0);
    for (std::size_t pos = 0; pos < order_.size(); ++pos) position[order_[pos]] = pos;
    for (const auto& [a, b] : pairs) {
      // Enforced when the later of the two edges is labeled.
      if (position[a] < position[b]) {
        floors_[position[b]].push_back(position[a]);
      } else {
        ceilings_[position[a]].push_back(position[b]);
      }
    }
  }

  // Replays a partial assignment; returns false on an adjacency conflict
  // between fully-labeled vertices.
  bool load(std::span<const Label> labels) {
    bool ok = true;
    for (EdgeId e = 0; e < labels.size(); ++e)
      if (labels[e] != 0) ok = assign(e, labels[e]) && ok;
    return ok;
  }

  // Admissible lower bound on the final color count of any completion.
  int lower_bound() {
    ++epoch_;
    int distinct = 0;
    int distinct_unused_light = 0;
    int distinct_heavy = 0;
    int extra_light = 0;
    for (VertexId v : closed_) {
      const Weight w = weight_[v];
      if (stamp_[w] == epoch_) continue;
      stamp_[w] = epoch_;
      ++distinct;
      if (w > q_) {
        ++distinct_heavy;
      } else if (!used_[w]) {
        ++distinct_unused_light;
      } else if (!leaf_label_[w]) {
        // Light color that no leaf can ever take.
        ++extra_light;
      }
    }
    const int with_open_leaves = distinct + std::max(0, leaves_open_ - distinct_unused_light);

    fill_small_prefix();
    bool any_heavy = distinct_heavy > 0;
    bool heavy_pair = false;
    for (VertexId v = 0; v < static_cast<VertexId>(p_); ++v) {
      if (!heavy(v)) continue;
      any_heavy = true;
      if (heavy_pair) continue;
      for (EdgeId e : g_.incident(v)) {
        const VertexId w = g_.edge(e).other(v);
        if (w > v && heavy(w)) {
          heavy_pair = true;
          break;
        }
      }
    }
    const int heavy_colors = std::max({distinct_heavy, any_heavy ? 1 : 0, heavy_pair ? 2 : 0});
    const int split = leaves_total_ + heavy_colors + extra_light;
    split_ = split;
    heavy_reserved_ = heavy_colors > distinct_heavy;
    const int edge_floor = q_ > 0 ? 2 : 1;
    return std::max({with_open_leaves, split, edge_floor});
  }

  struct Result {
    bool found = false;
    int colors = 0;
    std::vector<Label> labels;
  };

  // Optimization: minimum color count below `bound`. Feasibility: first
  // labeling with at most `bound` - 1 colors. Starts at order position `from`.
  Result run(int bound, bool first_only, Budget& budget, std::size_t from = 0,
             const std::atomic<int>* cancel_above = nullptr, int branch = 0) {
    best_ = bound;
    first_only_ = first_only;
    budget_ = &budget;
    cancel_above_ = cancel_above;
    branch_ = branch;
    result_ = {};
    if (lower_bound() < best_ && forward_ok(best_)) descend(from);
    flush_nodes();
    return result_;
  }

  bool assign(EdgeId e, Label l) {
    label_[e] = l;
    used_[l] = 1;
    if (leaf_edge_[e]) {
      leaf_label_[l] = 1;
      --leaves_open_;
    }
    const Edge& ed = g_.edge(e);
    weight_[ed.u] += l;
    weight_[ed.v] += l;
    const bool close_u = --remaining_[ed.u] == 0;
    const bool close_v = --remaining_[ed.v] == 0;
    if (close_u) closed_.push_back(ed.u);
    if (close_v) closed_.push_back(ed.v);
    bool ok = true;
    if (close_u) ok = no_clash(ed.u) && ok;
    if (close_v) ok = no_clash(ed.v) && ok;
    return ok;
  }

  void unassign(EdgeId e) {
    const Label l = label_[e];
    const Edge& ed = g_.edge(e);
    if (remaining_[ed.v]++ == 0) closed_.pop_back();
    if (remaining_[ed.u]++ == 0) closed_.pop_back();
    weight_[ed.u] -= l;
    weight_[ed.v] -= l;
    if (leaf_edge_[e]) {
      leaf_label_[l] = 0;
      ++leaves_open_;
    }
    used_[l] = 0;
    label_[e] = 0;
  }

  std::uint64_t nodes() const { return nodes_total_; }
  const std::vector<EdgeId>& order() const { return order_; }
  // Label window allowed at `pos` by the ordering constraints.
  std::pair<int, int> window(std::size_t pos) const {
    int lo = 1, hi = q_;
    for (std::size_t before : floors_[pos]) lo = std::max(lo, static_cast<int>(label_[order_[before]]) + 1);
    for (std::size_t before : ceilings_[pos]) hi = std::min(hi, static_cast<int>(label_[order_[before]]) - 1);
    return {lo, hi};
  }

  // Call right after lower_bound(). When one more color would reach `bound`,
  // every open vertex must still be able to land on a color already paid
  // for: a leaf label, a future leaf label, a closed weight, or a reserved
  // heavy color.
  bool forward_ok(int bound) {
    if (split_ < bound - 1) return true;
    fill_large_prefix();
    for (VertexId v = 0; v < static_cast<VertexId>(p_); ++v) {
      const int r = remaining_[v];
      if (r == 0 || is_leaf_[v]) continue;
      const Weight lo = weight_[v] + small_prefix_[r];
      const Weight hi = weight_[v] + large_prefix_[r];
      bool reachable = false;
      for (Weight w = lo; w <= std::min<Weight>(hi, q_) && !reachable; ++w)
        reachable = leaf_label_[w] || (!used_[w] && leaves_open_ > 0) || stamp_[w] == epoch_;
      if (!reachable && hi > q_) {
        if (heavy_reserved_) {
          reachable = true;
        } else {
          for (Weight w = std::max<Weight>(lo, q_ + 1); w <= hi && !reachable; ++w)
            reachable = stamp_[w] == epoch_;
        }
      }
      if (!reachable) return false;
    }
    return true;
  }

 private:
  bool heavy(VertexId v) const {
    if (remaining_[v] == 0) return weight_[v] > q_;
    return !is_leaf_[v] && weight_[v] + small_prefix_[remaining_[v]] > q_;
  }

  void fill_large_prefix() {
    std::size_t r = 1;
    for (int l = q_; l >= 1 && r < large_prefix_.size(); --l)
      if (!used_[l]) {
        large_prefix_[r] = large_prefix_[r - 1] + l;
        ++r;
      }
    for (; r < large_prefix_.size(); ++r) large_prefix_[r] = large_prefix_[r - 1];
  }

  void fill_small_prefix() {
    std::size_t r = 1;
    for (int l = 1; l <= q_ && r < small_prefix_.size(); ++l)
      if (!used_[l]) {
        small_prefix_[r] = small_prefix_[r - 1] + l;
        ++r;
      }
    // Entries past the unused-label count are never read: a vertex never has
    // more unlabeled edges than there are unused labels.
    for (; r < small_prefix_.size(); ++r) small_prefix_[r] = std::numeric_limits<Weight>::max() / 4;
  }

  bool no_clash(VertexId v) const {
    for (EdgeId e : g_.incident(v)) {
      const VertexId w = g_.edge(e).other(v);
      if (remaining_[w] == 0 && weight_[w] == weight_[v]) return false;
    }
    return true;
  }

  // Pendants on the same anchor are interchangeable, so their labels may be
  // taken increasing in edge index.
  std::vector<std::pair<EdgeId, EdgeId>> pendant_chains() const {
    std::vector<std::pair<EdgeId, EdgeId>> out;
    std::vector<std::optional<EdgeId>> last_in_group(p_);
    for (EdgeId e = 0; e < g_.size(); ++e) {
      const Edge& ed = g_.edge(e);
      VertexId anchor;
      if (is_leaf_[ed.u] && !is_leaf_[ed.v]) {
        anchor = ed.v;
      } else if (is_leaf_[ed.v] && !is_leaf_[ed.u]) {
        anchor = ed.u;
      } else {
        continue;
      }
      if (last_in_group[anchor]) out.emplace_back(*last_in_group[anchor], e);
      last_in_group[anchor] = e;
    }
    return out;
  }

  void flush_nodes() {
    budget_->nodes.fetch_add(pending_nodes_, std::memory_order_relaxed);
    pending_nodes_ = 0;
  }

  bool out_of_budget() {
    if (budget_->exhausted.load(std::memory_order_relaxed)) return true;
    if (cancel_above_ && cancel_above_->load(std::memory_order_relaxed) < branch_) return true;
    if ((nodes_total_ & 1023) == 0) {
      flush_nodes();
      if (budget_->nodes.load(std::memory_order_relaxed) >= budget_->node_limit ||
          Clock::now() >= budget_->deadline) {
        budget_->exhausted.store(true);
        return true;
      }
    }
    return false;
  }

  // Returns true to stop the whole search.
  bool descend(std::size_t pos) {
    ++nodes_total_;
    ++pending_nodes_;
    if (out_of_budget()) return true;
    if (pos == order_.size()) {
      const int colors = distinct_closed();
      if (colors < best_) {
        best_ = colors;
        result_.found = true;
        result_.colors = colors;
        result_.labels = label_;
        if (first_only_) return true;
      }
      return false;
    }
    const EdgeId e = order_[pos];
    const auto [lo, hi] = window(pos);
    for (int l = lo; l <= hi; ++l) {
      if (used_[l]) continue;
      const bool ok = assign(e, l);
      bool stop = false;
      if (ok && lower_bound() < best_ && forward_ok(best_)) stop = descend(pos + 1);
      unassign(e);
      if (stop) return true;
    }
    return false;
  }

  int distinct_closed() {
    ++epoch_;
    int distinct = 0;
    for (VertexId v : closed_)
      if (stamp_[weight_[v]] != epoch_) {
        stamp_[weight_[v]] = epoch_;
        ++distinct;
      }
    return distinct;
  }

  const Graph& g_;
  int q_;
  int p_;
  std::vector<EdgeId> order_;
  std::vector<Label> label_;
  std::vector<char> used_;
  std::vector<char> leaf_label_;
  std::vector<Weight> weight_;
  std::vector<int> remaining_;
  std::vector<char> is_leaf_;
  std::vector<char> leaf_edge_;
  std::vector<std::vector<std::size_t>> floors_;
  std::vector<std::vector<std::size_t>> ceilings_;
  std::vector<std::uint32_t> stamp_;
  std::vector<Weight> small_prefix_;
  std::vector<Weight> large_prefix_;
  std::vector<VertexId> closed_;
  std::uint32_t epoch_ = 0;
  int leaves_total_ = 0;
  int leaves_open_ = 0;
  int split_ = 0;
  bool heavy_reserved_ = false;

  int best_ = 0;
  bool first_only_ = false;
  Budget* budget_ = nullptr;
  const std::atomic<int>* cancel_above_ = nullptr;
  int branch_ = 0;
  std::uint64_t nodes_total_ = 0;
  std::uint64_t pending_nodes_ = 0;
  Result result_;
};

void require_searchable(const Graph& g) {
  if (g.size() < 2)
    throw DomainError("solver needs at least 2 edges, got " + std::to_string(g.size()));
  if (!g.is_connected()) throw DomainError("solver needs a connected graph");
}

struct Merged {
  Search::Result result;
  std::uint64_t nodes = 0;
};

// Runs the search either in one pass, or split on the label of the first
// edge with each branch keeping its own incumbent.
Merged run_search(const Graph& g, const SearchConfig& cfg, int bound, bool first_only,
                  Budget& budget) {
  std::vector<EdgeId> order = search_edge_order(g, cfg.edge_order);
  const int q = static_cast<int>(g.size());
  const int width = std::min(cfg.parallel_width, q);
  std::vector<std::pair<EdgeId, EdgeId>> less_than;
  if (cfg.symmetry_breaking) less_than = automorphism_order_constraints(g);
  if (width <= 1) {
    Search s(g, std::move(order), cfg.symmetry_breaking, less_than);
    Merged m;
    m.result = s.run(bound, first_only, budget);
    m.nodes = s.nodes();
    return m;
  }

  std::vector<Search::Result> branch_results(q);
  std::atomic<int> next_branch{0};
  std::atomic<int> solved_branch{first_only ? q : std::numeric_limits<int>::max()};
  std::atomic<std::uint64_t> nodes{0};
  auto worker = [&] {
    Search s(g, order, cfg.symmetry_breaking, less_than);
    const EdgeId first = s.order().front();
    for (int b = next_branch.fetch_add(1); b < q; b = next_branch.fetch_add(1)) {
      if (budget.exhausted.load()) break;
      if (first_only && solved_branch.load() < b) break;
      const bool ok = s.assign(first, b + 1);
      if (ok) {
        branch_results[b] =
            s.run(bound, first_only, budget, 1, first_only ? &solved_branch : nullptr, b);
        if (first_only && branch_results[b].found) {
          int cur = solved_branch.load();
          while (b < cur && !solved_branch.compare_exchange_weak(cur, b)) {
          }
        }
      }
      s.unassign(first);
    }
    nodes.fetch_add(s.nodes());
  };
  std::vector<std::thread> threads;
  for (int t = 0; t < width; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  Merged m;
  m.nodes = nodes.load();
  for (int b = 0; b < q; ++b) {
    const auto& r = branch_results[b];
    if (!r.found) continue;
    if (first_only) {
      m.result = r;
      break;
    }
    if (!m.result.found || r.colors < m.result.colors) m.result = r;
  }
  return m;
}

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

std::string_view edge_order_name(EdgeOrder order) {
  for (const auto& [o, name] : kOrderNames)
    if (o == order) return name;
  return "connected";
}

std::optional<EdgeOrder> parse_edge_order(std::string_view name) {
  for (const auto& [o, n] : kOrderNames)
    if (n == name) return o;
  return std::nullopt;
}

std::string_view search_status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Exact: return "exact";
    case SearchStatus::Feasible: return "feasible";
    case SearchStatus::Infeasible: return "infeasible";
    case SearchStatus::BudgetExhausted: return "budget_exhausted";
  }
  return "budget_exhausted";
}

void SearchConfig::validate() const {
  if (!(time_budget_seconds > 0.0)) throw DomainError("time budget must be positive");
  if (node_budget == 0) throw DomainError("node budget must be positive");
  if (parallel_width < 1) throw DomainError("parallel width must be at least 1");
  if (target_colors && *target_colors < 1) throw DomainError("target colors must be positive");
  if (upper_bound_hint && *upper_bound_hint < 1) throw DomainError("upper bound hint must be positive");
}

std::vector<EdgeId> search_edge_order(const Graph& g, EdgeOrder order) {
  const std::size_t q = g.size();
  std::vector<EdgeId> out;
  out.reserve(q);
  switch (order) {
    case EdgeOrder::InputOrder:
      for (EdgeId e = 0; e < q; ++e) out.push_back(e);
      return out;
    case EdgeOrder::MaxDegreeFirst: {
      for (EdgeId e = 0; e < q; ++e) out.push_back(e);
      auto key = [&g](EdgeId e) { return g.degree(g.edge(e).u) + g.degree(g.edge(e).v); };
      std::stable_sort(out.begin(), out.end(),
                       [&](EdgeId a, EdgeId b) { return key(a) > key(b); });
      return out;
    }
    case EdgeOrder::ConnectedExpansion: {
      std::vector<int> remaining(g.order());
      for (VertexId v = 0; v < g.order(); ++v) remaining[v] = static_cast<int>(g.degree(v));
      std::vector<char> touched(g.order(), 0), picked(q, 0);
      for (std::size_t step = 0; step < q; ++step) {
        bool frontier = false;
        for (EdgeId e = 0; e < q && !frontier; ++e)
          frontier = !picked[e] && (touched[g.edge(e).u] || touched[g.edge(e).v]);
        std::optional<EdgeId> best;
        std::tuple<int, int, int> best_key{};
        for (EdgeId e = 0; e < q; ++e) {
          if (picked[e]) continue;
          const Edge& ed = g.edge(e);
          if (frontier && !touched[ed.u] && !touched[ed.v]) continue;
          const bool cu = remaining[ed.u] == 1, cv = remaining[ed.v] == 1;
          const int closes_inner = (cu && g.degree(ed.u) > 1) + (cv && g.degree(ed.v) > 1);
          std::tuple<int, int, int> key{closes_inner, cu + cv, -(remaining[ed.u] + remaining[ed.v])};
          if (!best || key > best_key) {
            best = e;
            best_key = key;
          }
        }
        picked[*best] = 1;
        out.push_back(*best);
        const Edge& ed = g.edge(*best);
        touched[ed.u] = touched[ed.v] = 1;
        --remaining[ed.u];
        --remaining[ed.v];
      }
      return out;
    }
  }
  return out;
}

std::vector<std::pair<EdgeId, EdgeId>> automorphism_order_constraints(const Graph& g) {
  std::vector<std::pair<EdgeId, EdgeId>> out;
  if (!g.family()) return out;
  const auto nm = parse_friendship_corona_tag(*g.family());
  if (!nm) return out;
  const auto [n, m] = *nm;
  if (n < 2 || m < 1 || !(g == friendship_corona(n, m))) return out;
  // Swapping u_i with v_i, and permuting triangles, are automorphisms. The
  // first pendant of each side is its group minimum under pendant sorting,
  // so both orderings can be imposed together.
  const FriendshipCoronaLayout at{n, m};
  for (int i = 1; i <= n; ++i) out.emplace_back(at.u_pendant(i, 1), at.v_pendant(i, 1));
  for (int i = 1; i < n; ++i) out.emplace_back(at.u_pendant(i, 1), at.u_pendant(i + 1, 1));
  return out;
}

int lower_bound_prune(const Graph& g, const PartialAssignment& state) {
  if (state.labels.size() != g.size())
    throw ValidationError("partial assignment has " + std::to_string(state.labels.size()) +
                          " entries for " + std::to_string(g.size()) + " edges");
  std::vector<char> seen(g.size() + 1, 0);
  for (Label l : state.labels) {
    if (l == 0) continue;
    if (l < 0 || l > static_cast<Label>(g.size()) || seen[l])
      throw ValidationError("partial assignment reuses or misplaces label " + std::to_string(l));
    seen[l] = 1;
  }
  std::vector<EdgeId> order(g.size());
  for (EdgeId e = 0; e < g.size(); ++e) order[e] = e;
  Search s(g, std::move(order), false);
  if (!s.load(state.labels)) return kPruned;
  return s.lower_bound();
}

SearchOutcome exact_chi_la(const Graph& g, const SearchConfig& cfg) {
  cfg.validate();
  require_searchable(g);
  const auto start = Clock::now();
  Budget budget(cfg.time_budget_seconds, cfg.node_budget);
  const int p = static_cast<int>(g.order());

  SearchOutcome out;
  auto finish = [&](const Merged& m, int bound) {
    out.nodes_explored += m.nodes;
    if (m.result.found)
      out.certificate = make_certificate(g, EdgeLabeling(m.result.labels));
    if (budget.exhausted.load()) {
      out.status = SearchStatus::BudgetExhausted;
      out.colors = m.result.found ? m.result.colors : 0;
    } else if (m.result.found) {
      out.status = SearchStatus::Exact;
      out.colors = m.result.colors;
    } else {
      out.status = SearchStatus::Infeasible;
      out.colors = bound - 1;
    }
  };

  if (cfg.upper_bound_hint && *cfg.upper_bound_hint < p) {
    const int bound = *cfg.upper_bound_hint + 1;
    finish(run_search(g, cfg, bound, false, budget), bound);
    if (out.status != SearchStatus::Infeasible) {
      out.wall_seconds = elapsed(start);
      return out;
    }
  }
  finish(run_search(g, cfg, p + 1, false, budget), p + 1);
  out.wall_seconds = elapsed(start);
  return out;
}

SearchOutcome feasible_with_k_colors(const Graph& g, int k, const SearchConfig& cfg) {
  cfg.validate();
  require_searchable(g);
  if (k < 2 || k > static_cast<int>(g.order()))
    throw DomainError("k must lie in [2, p], got " + std::to_string(k));
  const auto start = Clock::now();
  Budget budget(cfg.time_budget_seconds, cfg.node_budget);
  const Merged m = run_search(g, cfg, k + 1, true, budget);

  SearchOutcome out;
  out.nodes_explored = m.nodes;
  if (m.result.found) {
    out.status = SearchStatus::Feasible;
    out.colors = m.result.colors;
    out.certificate = make_certificate(g, EdgeLabeling(m.result.labels));
  } else if (budget.exhausted.load()) {
    out.status = SearchStatus::BudgetExhausted;
  } else {
    out.status = SearchStatus::Infeasible;
    out.colors = k;
  }
  out.wall_seconds = elapsed(start);
  return out;
}

}  // namespace antimagic
