#include "antimagic/graph.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <regex>
#include <set>

#include "antimagic/errors.hpp"

namespace antimagic {

namespace {

constexpr std::array<std::pair<RoleKind, std::string_view>, 7> kRoleNames{{
    {RoleKind::Hub, "hub"},
    {RoleKind::Inner, "inner"},
    {RoleKind::USide, "u"},
    {RoleKind::VSide, "v"},
    {RoleKind::Vertex, "vertex"},
    {RoleKind::Pendant, "pendant"},
    {RoleKind::Copy, "copy"},
}};

std::string fnv1a_hex(const std::vector<Edge>& edges, std::size_t order) {
  std::uint64_t h = 14695981039346656037ULL;
  auto mix = [&h](std::uint64_t word) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (word >> (8 * byte)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(order);
  mix(edges.size());
  for (const Edge& e : edges) {
    mix(e.u);
    mix(e.v);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Graph make_graph(std::vector<Edge> edges, std::vector<VertexRole> roles,
                 std::optional<std::string> family) {
  const std::size_t order = roles.size();
  return Graph(order, std::move(edges), std::move(roles), std::move(family));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

std::string_view role_kind_name(RoleKind kind) {
  for (const auto& [k, name] : kRoleNames)
    if (k == kind) return name;
  return "vertex";
}

std::optional<RoleKind> parse_role_kind(std::string_view name) {
  for (const auto& [k, n] : kRoleNames)
    if (n == name) return k;
  return std::nullopt;
}

Graph::Graph(std::size_t order, std::vector<Edge> edges, std::vector<VertexRole> roles,
             std::optional<std::string> family)
    : edges_(std::move(edges)), roles_(std::move(roles)), family_(std::move(family)) {
  if (roles_.size() != order)
    throw DomainError("graph: " + std::to_string(roles_.size()) + " roles for " +
                      std::to_string(order) + " vertices");
  incident_.resize(order);
  std::set<std::pair<VertexId, VertexId>> seen;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.u >= order || ed.v >= order)
      throw DomainError("graph: edge " + std::to_string(e) + " references a missing vertex");
    if (ed.u == ed.v) throw DomainError("graph: edge " + std::to_string(e) + " is a loop");
    if (!seen.emplace(std::min(ed.u, ed.v), std::max(ed.u, ed.v)).second)
      throw DomainError("graph: edge " + std::to_string(e) + " duplicates an earlier edge");
    incident_[ed.u].push_back(e);
    incident_[ed.v].push_back(e);
  }
  for (VertexId v = 0; v < order; ++v) {
    const VertexRole& r = roles_[v];
    if ((r.kind == RoleKind::Pendant || r.kind == RoleKind::Copy) && r.anchor >= order)
      throw DomainError("graph: role of vertex " + std::to_string(v) + " has a missing anchor");
  }
  hash_ = fnv1a_hex(edges_, order);
}

bool Graph::adjacent(VertexId a, VertexId b) const { return edge_between(a, b).has_value(); }

std::optional<EdgeId> Graph::edge_between(VertexId a, VertexId b) const {
  const auto& inc = incident_.at(degree(a) <= degree(b) ? a : b);
  for (EdgeId e : inc) {
    const Edge& ed = edges_[e];
    if ((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)) return e;
  }
  return std::nullopt;
}

bool Graph::is_connected() const {
  if (order() == 0) return true;
  std::vector<char> seen(order(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : incident_[v]) {
      VertexId w = edges_[e].other(v);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == order();
}

std::string Graph::vertex_name(VertexId v) const {
  const VertexRole& r = role(v);
  switch (r.kind) {
    case RoleKind::Hub:
      return "x";
    case RoleKind::Inner:
    case RoleKind::VSide:
      return "v_" + std::to_string(r.index);
    case RoleKind::USide:
      return "u_" + std::to_string(r.index);
    case RoleKind::Vertex:
      return "w_" + std::to_string(r.index);
    case RoleKind::Pendant:
    case RoleKind::Copy: {
      const VertexRole& a = role(r.anchor);
      std::string j = std::to_string(r.index);
      std::string base;
      switch (a.kind) {
        case RoleKind::Hub: return "x_" + j;
        case RoleKind::USide: base = "u"; break;
        case RoleKind::Inner:
        case RoleKind::VSide: base = "v"; break;
        case RoleKind::Vertex: base = "w"; break;
        default: return "(" + vertex_name(r.anchor) + ")_" + j;
      }
      return base + "^" + std::to_string(a.index) + "_" + j;
    }
  }
  return std::to_string(v);
}

Graph friendship(int n) {
  require(n >= 2, "friendship graph needs n >= 2, got " + std::to_string(n));
  std::vector<VertexRole> roles{VertexRole::hub()};
  for (int i = 1; i <= n; ++i) roles.push_back(VertexRole::u_side(i));
  for (int i = 1; i <= n; ++i) roles.push_back(VertexRole::v_side(i));
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({0, static_cast<VertexId>(i)});
  for (int i = 1; i <= n; ++i) edges.push_back({0, static_cast<VertexId>(n + i)});
  for (int i = 1; i <= n; ++i)
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(n + i)});
  return make_graph(std::move(edges), std::move(roles),
                    "friendship(" + std::to_string(n) + ")");
}

Graph fan(int n) {
  require(n >= 2, "fan graph needs n >= 2, got " + std::to_string(n));
  std::vector<VertexRole> roles{VertexRole::hub()};
  for (int i = 1; i <= n; ++i) roles.push_back(VertexRole::inner(i));
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({0, static_cast<VertexId>(i)});
  for (int i = 1; i < n; ++i)
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1)});
  return make_graph(std::move(edges), std::move(roles), "fan(" + std::to_string(n) + ")");
}

Graph null_graph(int m) {
  require(m >= 1, "null graph needs m >= 1, got " + std::to_string(m));
  std::vector<VertexRole> roles;
  for (int i = 1; i <= m; ++i) roles.push_back(VertexRole::vertex(i));
  return make_graph({}, std::move(roles), "null(" + std::to_string(m) + ")");
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3, got " + std::to_string(n));
  std::vector<VertexRole> roles;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    roles.push_back(VertexRole::vertex(i + 1));
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n)});
  }
  return make_graph(std::move(edges), std::move(roles), "cycle(" + std::to_string(n) + ")");
}

Graph complete(int n) {
  require(n >= 1, "complete graph needs n >= 1, got " + std::to_string(n));
  std::vector<VertexRole> roles;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    roles.push_back(VertexRole::vertex(i + 1));
    for (int j = i + 1; j < n; ++j)
      edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
  }
  return make_graph(std::move(edges), std::move(roles),
                    "complete(" + std::to_string(n) + ")");
}

Graph path(int n) {
  require(n >= 1, "path needs n >= 1, got " + std::to_string(n));
  std::vector<VertexRole> roles;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    roles.push_back(VertexRole::vertex(i + 1));
    if (i + 1 < n) edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1)});
  }
  return make_graph(std::move(edges), std::move(roles), "path(" + std::to_string(n) + ")");
}

Graph corona(const Graph& g, const Graph& h) {
  const auto pg = static_cast<VertexId>(g.order());
  const auto ph = static_cast<VertexId>(h.order());
  const bool pendant_copies = h.size() == 0;

  std::vector<VertexRole> roles(g.roles().begin(), g.roles().end());
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  roles.reserve(pg * (1 + ph));
  for (VertexId i = 0; i < pg; ++i) {
    const VertexId base = pg + i * ph;
    for (VertexId j = 0; j < ph; ++j) {
      roles.push_back(pendant_copies ? VertexRole::pendant(i, static_cast<int>(j + 1))
                                     : VertexRole::copy(i, static_cast<int>(j + 1)));
      edges.push_back({i, base + j});
    }
    for (const Edge& e : h.edges()) edges.push_back({base + e.u, base + e.v});
  }
  std::optional<std::string> tag;
  if (g.family() && h.family()) tag = "corona(" + *g.family() + "," + *h.family() + ")";
  return make_graph(std::move(edges), std::move(roles), std::move(tag));
}

Graph friendship_corona(int n, int m) { return corona(friendship(n), null_graph(m)); }

Graph fan_corona(int n, int m) { return corona(fan(n), null_graph(m)); }

std::optional<std::pair<int, int>> parse_friendship_corona_tag(const std::string& tag) {
  static const std::regex re(R"(corona\(friendship\((\d+)\),null\((\d+)\)\))");
  std::smatch match;
  if (!std::regex_match(tag, match, re)) return std::nullopt;
  return std::pair{std::stoi(match[1]), std::stoi(match[2])};
}

}  // namespace antimagic
