#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace antimagic {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  VertexId u;
  VertexId v;

  VertexId other(VertexId w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class RoleKind {
  Hub,      // x
  Inner,    // v_i of a fan
  USide,    // u_i of a friendship graph
  VSide,    // v_i of a friendship graph
  Vertex,   // i-th vertex of a generic family (cycle, path, complete, null)
  Pendant,  // j-th vertex of the null-graph copy attached to `anchor`
  Copy,     // j-th vertex of a non-null copy attached to `anchor`
};

// `index` is 1-based wherever the vertex has a name subscript. For Pendant and
// Copy, `anchor` is the vertex the copy hangs off.
struct VertexRole {
  RoleKind kind = RoleKind::Vertex;
  int index = 0;
  VertexId anchor = 0;

  static VertexRole hub() { return {RoleKind::Hub, 0, 0}; }
  static VertexRole inner(int i) { return {RoleKind::Inner, i, 0}; }
  static VertexRole u_side(int i) { return {RoleKind::USide, i, 0}; }
  static VertexRole v_side(int i) { return {RoleKind::VSide, i, 0}; }
  static VertexRole vertex(int i) { return {RoleKind::Vertex, i, 0}; }
  static VertexRole pendant(VertexId anchor, int j) { return {RoleKind::Pendant, j, anchor}; }
  static VertexRole copy(VertexId anchor, int j) { return {RoleKind::Copy, j, anchor}; }

  friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

std::string_view role_kind_name(RoleKind kind);
std::optional<RoleKind> parse_role_kind(std::string_view name);

// Immutable undirected simple graph with dense vertex and edge indices.
class Graph {
 public:
  Graph(std::size_t order, std::vector<Edge> edges, std::vector<VertexRole> roles,
        std::optional<std::string> family = std::nullopt);

  std::size_t order() const { return roles_.size(); }  // p
  std::size_t size() const { return edges_.size(); }   // q

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const VertexRole> roles() const { return roles_; }
  const VertexRole& role(VertexId v) const { return roles_.at(v); }
  const std::optional<std::string>& family() const { return family_; }

  std::size_t degree(VertexId v) const { return incident_.at(v).size(); }
  std::span<const EdgeId> incident(VertexId v) const { return incident_.at(v); }
  bool adjacent(VertexId a, VertexId b) const;
  std::optional<EdgeId> edge_between(VertexId a, VertexId b) const;
  bool is_connected() const;

  // Name in the x, u_i, v_i, x_j, u^i_j, v^i_j convention.
  std::string vertex_name(VertexId v) const;

  // FNV-1a over the order and the ordered edge list, as 16 hex digits.
  const std::string& content_hash() const { return hash_; }

  // Index-identical equality: same order, same edge list, same roles.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.edges_ == b.edges_ && a.roles_ == b.roles_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<VertexRole> roles_;
  std::optional<std::string> family_;
  std::vector<std::vector<EdgeId>> incident_;
  std::string hash_;
};

// Families. Every factory throws DomainError for out-of-range parameters.
Graph friendship(int n);       // f_n, n >= 2
Graph fan(int n);              // F_n, n >= 2
Graph null_graph(int m);       // O_m, m >= 1
Graph cycle(int n);            // C_n, n >= 3
Graph complete(int n);         // K_n, n >= 1
Graph path(int n);             // P_n, n >= 1
Graph corona(const Graph& g, const Graph& h);

Graph friendship_corona(int n, int m);
Graph fan_corona(int n, int m);

// Edge and vertex indices of f_n o O_m under the canonical layout. Subscripts
// are 1-based like the vertex names.
struct FriendshipCoronaLayout {
  int n;
  int m;

  VertexId hub() const { return 0; }
  VertexId u(int i) const { return static_cast<VertexId>(i); }
  VertexId v(int i) const { return static_cast<VertexId>(n + i); }

  EdgeId hub_u(int i) const { return static_cast<EdgeId>(i - 1); }
  EdgeId hub_v(int i) const { return static_cast<EdgeId>(n + i - 1); }
  EdgeId rung(int i) const { return static_cast<EdgeId>(2 * n + i - 1); }
  EdgeId hub_pendant(int j) const { return static_cast<EdgeId>(3 * n + j - 1); }
  EdgeId u_pendant(int i, int j) const {
    return static_cast<EdgeId>(3 * n + m + (i - 1) * m + j - 1);
  }
  EdgeId v_pendant(int i, int j) const {
    return static_cast<EdgeId>(3 * n + m + n * m + (i - 1) * m + j - 1);
  }
};

// Family tag parsing for callers that dispatch on it.
std::optional<std::pair<int, int>> parse_friendship_corona_tag(const std::string& tag);

}  // namespace antimagic
