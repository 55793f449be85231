#include "antimagic/io.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

#include "antimagic/errors.hpp"

namespace antimagic {

using nlohmann::json;

namespace {

json parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("/: expected a JSON object");
  if (!doc.contains("schema_version") || !doc["schema_version"].is_string())
    throw ParseError("/schema_version: missing or not a string");
  const auto version = doc["schema_version"].get<std::string>();
  int major = -1;
  const auto dot = version.find('.');
  const std::string_view head = std::string_view(version).substr(0, dot);
  auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), major);
  if (ec != std::errc() || ptr != head.data() + head.size())
    throw ParseError("/schema_version: malformed version '" + version + "'");
  if (major != kSchemaMajor)
    throw ParseError("/schema_version: unsupported major version " + std::to_string(major));
  return doc;
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + "/" + key + ": missing");
  return obj.at(key);
}

std::int64_t integer(const json& value, const std::string& where) {
  if (!value.is_number_integer()) throw ParseError(where + ": expected an integer");
  return value.get<std::int64_t>();
}

std::vector<std::int64_t> integer_array(const json& value, const std::string& where) {
  if (!value.is_array()) throw ParseError(where + ": expected an array");
  std::vector<std::int64_t> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i)
    out.push_back(integer(value[i], where + "/" + std::to_string(i)));
  return out;
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) throw ParseError(where + "/" + key + ": expected a string");
  return v.get<std::string>();
}

json envelope(std::string_view kind) {
  return json{{"schema_version", kSchemaVersion}, {"kind", kind}};
}

json role_to_json(const Graph& g, VertexId v) {
  const VertexRole& r = g.role(v);
  json out{{"kind", role_kind_name(r.kind)}, {"name", g.vertex_name(v)}};
  switch (r.kind) {
    case RoleKind::Hub:
      break;
    case RoleKind::Pendant:
    case RoleKind::Copy:
      out["anchor"] = r.anchor;
      out["j"] = r.index;
      break;
    default:
      out["i"] = r.index;
  }
  return out;
}

VertexRole role_from_json(const json& j, const std::string& where) {
  const auto name = string_field(j, "kind", where);
  const auto kind = parse_role_kind(name);
  if (!kind) throw ParseError(where + "/kind: unknown role '" + name + "'");
  VertexRole r{*kind, 0, 0};
  switch (*kind) {
    case RoleKind::Hub:
      break;
    case RoleKind::Pendant:
    case RoleKind::Copy:
      r.anchor = static_cast<VertexId>(integer(field(j, "anchor", where), where + "/anchor"));
      r.index = static_cast<int>(integer(field(j, "j", where), where + "/j"));
      break;
    default:
      r.index = static_cast<int>(integer(field(j, "i", where), where + "/i"));
  }
  return r;
}

json verdict_to_json(const Verdict& v) {
  if (v.local_antimagic()) return json{{"kind", "local_antimagic"}};
  return json{{"kind", "violation"}, {"edge", *v.violation}};
}

Verdict verdict_from_json(const json& j, const std::string& where) {
  const auto kind = string_field(j, "kind", where);
  if (kind == "local_antimagic") return Verdict::ok();
  if (kind == "violation")
    return Verdict::violated(static_cast<EdgeId>(integer(field(j, "edge", where), where + "/edge")));
  throw ParseError(where + "/kind: unknown verdict '" + kind + "'");
}

json certificate_body(const Certificate& c) {
  json out = envelope("certificate");
  out["graph_hash"] = c.graph_hash;
  out["labels"] = std::vector<Label>(c.labeling.labels().begin(), c.labeling.labels().end());
  out["weights"] = std::vector<Weight>(c.weights.values().begin(), c.weights.values().end());
  out["color_count"] = c.color_count;
  out["verdict"] = verdict_to_json(c.verdict);
  return out;
}

json witness_to_json(const InequalityWitness& w) {
  json out{{"name", w.name},
           {"n", w.n},
           {"m", w.m},
           {"r", w.r ? json(*w.r) : json(nullptr)},
           {"lhs", w.lhs},
           {"rhs", w.rhs},
           {"relation", w.relation == Relation::Greater ? ">" : "="},
           {"holds", w.holds},
           {"in_proof_scope", w.in_proof_scope}};
  if (w.printed_difference) {
    out["printed_difference"] = *w.printed_difference;
    out["printed_agrees"] = w.printed_agrees();
  }
  return out;
}

std::string_view source_name(ConstructionSource s) {
  switch (s) {
    case ConstructionSource::OddTables: return "odd_tables";
    case ConstructionSource::EvenTables: return "even_tables";
    case ConstructionSource::SolverFixture: return "solver_fixture";
  }
  return "odd_tables";
}

}  // namespace

std::string graph_to_json(const Graph& g) {
  json out = envelope("graph");
  out["family"] = g.family() ? json(*g.family()) : json(nullptr);
  out["p"] = g.order();
  out["q"] = g.size();
  out["hash"] = g.content_hash();
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  out["edges"] = std::move(edges);
  json roles = json::array();
  for (VertexId v = 0; v < g.order(); ++v) roles.push_back(role_to_json(g, v));
  out["roles"] = std::move(roles);
  return out.dump(2);
}

Graph graph_from_json(std::string_view text) {
  const json doc = parse_document(text);
  const auto p = integer(field(doc, "p", ""), "/p");
  const auto q = integer(field(doc, "q", ""), "/q");
  const json& edges = field(doc, "edges", "");
  const json& roles = field(doc, "roles", "");
  if (!edges.is_array()) throw ParseError("/edges: expected an array");
  if (!roles.is_array()) throw ParseError("/roles: expected an array");
  if (p < 0 || static_cast<std::size_t>(p) != roles.size())
    throw ParseError("/p: " + std::to_string(p) + " does not match " +
                     std::to_string(roles.size()) + " roles");
  if (q < 0 || static_cast<std::size_t>(q) != edges.size())
    throw ParseError("/q: " + std::to_string(q) + " does not match " +
                     std::to_string(edges.size()) + " edges");
  std::vector<Edge> edge_list;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "/edges/" + std::to_string(i);
    const auto pair = integer_array(edges[i], where);
    if (pair.size() != 2) throw ParseError(where + ": expected [u, v]");
    if (pair[0] < 0 || pair[1] < 0) throw ParseError(where + ": negative vertex index");
    edge_list.push_back({static_cast<VertexId>(pair[0]), static_cast<VertexId>(pair[1])});
  }
  std::vector<VertexRole> role_list;
  for (std::size_t i = 0; i < roles.size(); ++i)
    role_list.push_back(role_from_json(roles[i], "/roles/" + std::to_string(i)));
  std::optional<std::string> family;
  if (doc.contains("family") && !doc["family"].is_null()) family = string_field(doc, "family", "");
  try {
    Graph g(static_cast<std::size_t>(p), std::move(edge_list), std::move(role_list), family);
    if (doc.contains("hash") && doc["hash"].is_string() && doc["hash"] != g.content_hash())
      throw ParseError("/hash: stored hash does not match the edge list");
    return g;
  } catch (const DomainError& e) {
    throw ParseError(std::string("/edges: ") + e.what());
  }
}

std::string labeling_to_json(const std::string& graph_hash, const EdgeLabeling& f) {
  json out = envelope("labeling");
  out["graph_hash"] = graph_hash;
  out["labels"] = std::vector<Label>(f.labels().begin(), f.labels().end());
  return out.dump(2);
}

LabelingDocument labeling_from_json(std::string_view text) {
  const json doc = parse_document(text);
  return {string_field(doc, "graph_hash", ""),
          EdgeLabeling(integer_array(field(doc, "labels", ""), "/labels"))};
}

std::string certificate_to_json(const Certificate& c) { return certificate_body(c).dump(2); }

Certificate certificate_from_json(std::string_view text) {
  const json doc = parse_document(text);
  Certificate c;
  c.graph_hash = string_field(doc, "graph_hash", "");
  c.labeling = EdgeLabeling(integer_array(field(doc, "labels", ""), "/labels"));
  c.weights = WeightMap(integer_array(field(doc, "weights", ""), "/weights"));
  const auto count = integer(field(doc, "color_count", ""), "/color_count");
  if (count < 0) throw ParseError("/color_count: negative");
  c.color_count = static_cast<std::size_t>(count);
  c.verdict = verdict_from_json(field(doc, "verdict", ""), "/verdict");
  return c;
}

std::string construction_report_to_json(const ConstructionReport& r) {
  json out = certificate_body(r.certificate);
  out["kind"] = "construction_report";
  out["n"] = r.n;
  out["m"] = 1;
  out["parity"] = r.parity == Parity::Odd ? "odd" : "even";
  out["source"] = source_name(r.source);
  json forms = json::object();
  for (const ClosedForm& f : r.closed_forms) forms[f.name] = f.value;
  out["closed_forms"] = std::move(forms);
  out["colors"] = r.certificate.weights.color_set();
  out["caption_colors"] = r.caption_colors ? json(*r.caption_colors) : json(nullptr);
  return out.dump(2);
}

std::string bound_report_to_json(const BoundReport& r) {
  json out = envelope("bound_report");
  auto opt = [](const auto& v) { return v ? json(*v) : json(nullptr); };
  auto opt_prov = [](const std::optional<Provenance>& p) {
    return p ? json(provenance_name(*p)) : json(nullptr);
  };
  out["family"] = family_name(r.family);
  out["n"] = r.n;
  out["m"] = r.m;
  out["lower"] = r.lower;
  out["lower_provenance"] = provenance_name(r.lower_provenance);
  out["raw_lemma_lower"] = opt(r.raw_lemma_lower);
  out["upper"] = opt(r.upper);
  out["upper_provenance"] = opt_prov(r.upper_provenance);
  out["exact"] = opt(r.exact);
  out["exact_provenance"] = opt_prov(r.exact_provenance);
  out["consistent"] = r.consistent();
  return out.dump(2);
}

std::string search_outcome_to_json(const SearchOutcome& o) {
  json out = o.certificate ? certificate_body(*o.certificate) : envelope("search_outcome");
  out["kind"] = "search_outcome";
  out["search"] = {{"status", search_status_name(o.status)},
                   {"colors", o.colors},
                   {"nodes_explored", o.nodes_explored},
                   {"wall_seconds", o.wall_seconds}};
  return out.dump(2);
}

SearchOutcome search_outcome_from_json(std::string_view text) {
  const json doc = parse_document(text);
  const json& search = field(doc, "search", "");
  SearchOutcome o;
  const auto status = string_field(search, "status", "/search");
  bool known = false;
  for (auto s : {SearchStatus::Exact, SearchStatus::Feasible, SearchStatus::Infeasible,
                 SearchStatus::BudgetExhausted})
    if (search_status_name(s) == status) {
      o.status = s;
      known = true;
    }
  if (!known) throw ParseError("/search/status: unknown status '" + status + "'");
  o.colors = static_cast<int>(integer(field(search, "colors", "/search"), "/search/colors"));
  o.nodes_explored = static_cast<std::uint64_t>(
      integer(field(search, "nodes_explored", "/search"), "/search/nodes_explored"));
  if (doc.contains("labels")) o.certificate = certificate_from_json(text);
  return o;
}

std::string sweep_to_csv(const std::vector<InequalityWitness>& witnesses) {
  std::ostringstream out;
  out << "name,n,m,r,lhs,rhs,holds\n";
  for (const auto& w : witnesses) {
    out << w.name << ',' << w.n << ',' << w.m << ',';
    if (w.r) out << *w.r;
    out << ',' << w.lhs << ',' << w.rhs << ',' << (w.holds ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string sweep_to_json(const std::vector<InequalityWitness>& witnesses) {
  json out = envelope("sweep");
  json list = json::array();
  for (const auto& w : witnesses) list.push_back(witness_to_json(w));
  out["witnesses"] = std::move(list);
  return out.dump(2);
}

std::string to_dot(const Graph& g, const EdgeLabeling* f) {
  std::optional<WeightMap> w;
  if (f) w = weights(g, *f);
  std::ostringstream out;
  out << "graph G {\n";
  if (g.family()) out << "  label=\"" << *g.family() << "\";\n";
  for (VertexId v = 0; v < g.order(); ++v) {
    out << "  " << v << " [label=\"" << g.vertex_name(v) << " (" << role_kind_name(g.role(v).kind)
        << ")";
    if (w) out << "\\nw=" << (*w)[v];
    out << "\"];\n";
  }
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    out << "  " << ed.u << " -- " << ed.v;
    if (f) out << " [label=\"" << (*f)[e] << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace antimagic
