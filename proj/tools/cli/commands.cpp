#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "antimagic/bounds.hpp"
#include "antimagic/construction.hpp"
#include "antimagic/errors.hpp"
#include "antimagic/graph.hpp"
#include "antimagic/io.hpp"
#include "antimagic/labeling.hpp"
#include "antimagic/solver.hpp"
#include "cli/cache.hpp"

namespace antimagic::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string family;
  std::string lemma;
  int n = 0;
  int m = 1;
  std::string graph_file;
  std::string labeling_file;
  std::string method = "thm31";
  std::string out_file;
  std::optional<std::string> cache_dir;
  double time_budget = 600.0;
  std::uint64_t node_budget = UINT64_MAX;
  std::optional<int> target_colors;
  std::string order = "connected";
  int parallel = 1;
  bool no_symmetry = false;
  std::string format = "csv";
  int n_min = 0;
  int n_max = 50;
  int m_min = 1;
  int m_max = 50;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const std::string& path) {
  try {
    return graph_from_json(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + e.what());
  }
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_file.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return;
  }
  std::ofstream f(o.out_file);
  if (!f) throw ParseError(o.out_file + ": cannot write");
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

Graph family_graph(const std::string& family, int n, int m) {
  if (family == "friendship") return friendship(n);
  if (family == "fan") return fan(n);
  if (family == "cycle") return cycle(n);
  if (family == "complete") return complete(n);
  if (family == "path") return path(n);
  if (family == "null") return null_graph(m);
  if (family == "friendship-corona") return friendship_corona(n, m);
  if (family == "fan-corona") return fan_corona(n, m);
  if (family == "c3-corona") return corona(cycle(3), null_graph(m));
  if (family == "kn-k1") return corona(complete(n), complete(1));
  throw DomainError("unknown family '" + family + "'");
}

SearchConfig search_config(const Options& o) {
  SearchConfig cfg;
  cfg.time_budget_seconds = o.time_budget;
  cfg.node_budget = o.node_budget;
  cfg.target_colors = o.target_colors;
  const auto order = parse_edge_order(o.order);
  if (!order) throw DomainError("unknown edge order '" + o.order + "'");
  cfg.edge_order = *order;
  cfg.parallel_width = o.parallel;
  cfg.symmetry_breaking = !o.no_symmetry;
  cfg.validate();
  return cfg;
}

int cmd_gen(const Options& o, std::ostream& out) {
  emit(o, graph_to_json(family_graph(o.family, o.n, o.m)), out);
  return kSuccess;
}

// Runs (or reuses) a solver result and records it in the cache. With
// `need_certificate`, an infeasible outcome counts as a failure.
int solve_and_cache(const Options& o, bool need_certificate, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(o.graph_file);
  SearchConfig cfg = search_config(o);
  CertificateCache cache(CertificateCache::resolve_dir(o.cache_dir));

  std::optional<CacheRecord> record = cache.lookup(g.content_hash());
  std::optional<Certificate> cached;
  if (record) cached = cache.verified_certificate(*record, g);
  if (cached && !cfg.target_colors && record->exact && *record->exact == static_cast<std::int64_t>(cached->color_count)) {
    SearchOutcome hit;
    hit.status = SearchStatus::Exact;
    hit.colors = static_cast<int>(cached->color_count);
    hit.certificate = *cached;
    emit(o, search_outcome_to_json(hit), out);
    err << "cache hit: " << cache.dir() / record->certificate_path << " re-verified\n";
    return kSuccess;
  }
  if (cached && !cfg.target_colors) cfg.upper_bound_hint = static_cast<int>(cached->color_count);

  const SearchOutcome outcome = cfg.target_colors
                                    ? feasible_with_k_colors(g, *cfg.target_colors, cfg)
                                    : exact_chi_la(g, cfg);
  if (outcome.certificate && !verify_certificate(*outcome.certificate, g)) {
    err << "solver certificate failed re-verification\n";
    return kVerificationFailed;
  }
  emit(o, search_outcome_to_json(outcome), out);

  if (outcome.certificate && outcome.certificate->verdict.local_antimagic()) {
    const auto colors = static_cast<std::int64_t>(outcome.certificate->color_count);
    std::optional<std::int64_t> exact;
    std::optional<std::int64_t> lower;
    if (outcome.status == SearchStatus::Exact) exact = lower = colors;
    cache.store(g, *outcome.certificate, lower, colors, exact);
  }
  switch (outcome.status) {
    case SearchStatus::Exact:
    case SearchStatus::Feasible:
      return kSuccess;
    case SearchStatus::Infeasible:
      return need_certificate ? kVerificationFailed : kSuccess;
    case SearchStatus::BudgetExhausted:
      return kBudgetExhausted;
  }
  return kSuccess;
}

int cmd_label(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.method == "solver") return solve_and_cache(o, true, out, err);
  if (o.method != "thm31") throw DomainError("unknown method '" + o.method + "'");

  const Graph g = load_graph(o.graph_file);
  const auto tag = g.family() ? parse_friendship_corona_tag(*g.family()) : std::nullopt;
  if (!tag || tag->second != 1)
    throw DomainError("method thm31 needs an f_n o O_1 graph, got " +
                      g.family().value_or("an untagged graph"));
  const ConstructionReport report = construct_friendship_corona_o1(tag->first);
  if (!(report.graph == g))
    throw DomainError("graph is tagged " + *g.family() + " but its indexing differs from the canonical one");
  if (!verify_certificate(report.certificate, g)) {
    err << "construction certificate failed re-verification\n";
    return kVerificationFailed;
  }
  const auto colors = static_cast<std::int64_t>(report.certificate.color_count);
  CertificateCache cache(CertificateCache::resolve_dir(o.cache_dir));
  cache.store(g, report.certificate, lb_friendship(tag->first, 1), colors, colors);
  emit(o, construction_report_to_json(report), out);
  return kSuccess;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  return solve_and_cache(o, false, out, err);
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(o.graph_file);
  const std::string text = read_file(o.labeling_file);
  const LabelingDocument doc = labeling_from_json(text);
  if (doc.graph_hash != g.content_hash()) {
    err << "labeling was issued for graph " << doc.graph_hash << ", not " << g.content_hash() << '\n';
    return kVerificationFailed;
  }
  Certificate fresh;
  try {
    fresh = make_certificate(g, doc.labeling);
  } catch (const ValidationError& e) {
    err << "invalid labeling: " << e.what() << '\n';
    return kVerificationFailed;
  }
  json report{{"schema_version", kSchemaVersion},
              {"kind", "verification"},
              {"graph_hash", g.content_hash()},
              {"verdict", fresh.verdict.local_antimagic() ? "local_antimagic" : "violation"},
              {"color_count", fresh.color_count},
              {"colors", fresh.weights.color_set()}};
  if (fresh.verdict.violation) {
    const Edge& e = g.edge(*fresh.verdict.violation);
    report["violation"] = {{"edge", *fresh.verdict.violation},
                           {"u", g.vertex_name(e.u)},
                           {"v", g.vertex_name(e.v)},
                           {"weight", fresh.weights[e.u]}};
  }
  bool ok = fresh.verdict.local_antimagic();
  if (json::parse(text).contains("weights")) {
    const bool matches = verify_certificate(certificate_from_json(text), g);
    report["certificate_matches"] = matches;
    ok = ok && matches;
  }
  emit(o, report.dump(2), out);
  return ok ? kSuccess : kVerificationFailed;
}

Graph bounds_graph(GraphFamily f, int n, int m) {
  switch (f) {
    case GraphFamily::FriendshipCorona: return friendship_corona(n, m);
    case GraphFamily::FanCorona: return fan_corona(n, m);
    case GraphFamily::C3Corona: return corona(cycle(3), null_graph(m));
    case GraphFamily::KnK1: return corona(complete(n), complete(1));
  }
  return friendship_corona(n, m);
}

int cmd_bounds(const Options& o, std::ostream& out, std::ostream& err) {
  const auto family = parse_family(o.family);
  if (!family) throw DomainError("unknown family '" + o.family + "'");
  BoundReport report = bound_report(*family, o.n, o.m);

  CertificateCache cache(CertificateCache::resolve_dir(o.cache_dir));
  const Graph g = bounds_graph(*family, o.n, o.m);
  if (auto rec = cache.lookup(g.content_hash())) {
    if (auto cert = cache.verified_certificate(*rec, g)) {
      const auto colors = static_cast<std::int64_t>(cert->color_count);
      merge_upper(report, colors, Provenance::Solver);
      if (rec->exact && *rec->exact == colors) merge_exact(report, colors, Provenance::Solver);
    } else {
      err << "ignoring cached record for " << g.content_hash() << ": certificate did not verify\n";
    }
  }
  emit(o, bound_report_to_json(report), out);
  return report.consistent() ? kSuccess : kVerificationFailed;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  std::vector<InequalityWitness> witnesses;
  if (o.lemma == "lemma21") {
    witnesses = sweep_lemma21(SweepRange{o.n_min > 0 ? o.n_min : 2, o.n_max, o.m_min, o.m_max});
  } else if (o.lemma == "lemma22") {
    witnesses = sweep_lemma22(SweepRange{o.n_min > 0 ? o.n_min : 3, o.n_max, o.m_min, o.m_max});
  } else {
    throw DomainError("unknown lemma '" + o.lemma + "' (expected lemma21 or lemma22)");
  }
  if (o.format == "json") {
    emit(o, sweep_to_json(witnesses), out);
  } else if (o.format == "csv") {
    emit(o, sweep_to_csv(witnesses), out);
  } else {
    throw DomainError("unknown format '" + o.format + "'");
  }
  return kSuccess;
}

int cmd_export_dot(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph_file);
  if (o.labeling_file.empty()) {
    emit(o, to_dot(g), out);
    return kSuccess;
  }
  const LabelingDocument doc = labeling_from_json(read_file(o.labeling_file));
  if (doc.graph_hash != g.content_hash())
    throw WrongGraphError("labeling was issued for graph " + doc.graph_hash);
  emit(o, to_dot(g, &doc.labeling), out);
  return kSuccess;
}

void add_search_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--time-budget", o.time_budget, "Wall-clock budget in seconds")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--node-budget", o.node_budget, "Search-node budget")->check(CLI::PositiveNumber);
  cmd->add_option("--target-colors", o.target_colors,
                  "Find a labeling with at most this many colors instead of minimizing");
  cmd->add_option("--order", o.order, "Edge order: connected, max-degree, input")
      ->check(CLI::IsMember({"connected", "max-degree", "input"}));
  cmd->add_option("--parallel", o.parallel, "Worker threads splitting the first edge")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--no-symmetry", o.no_symmetry, "Disable pendant symmetry breaking");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Local antimagic labelings of corona-product graphs", "antimagic"};
  app.require_subcommand(1);
  app.add_option("--cache-dir", o.cache_dir, "Certificate cache directory (env ANTIMAGIC_CACHE_DIR)");
  app.add_option("--out", o.out_file, "Write output to this file instead of stdout");

  auto* gen = app.add_subcommand("gen", "Generate a graph document");
  gen->add_option("family", o.family,
                  "friendship, fan, cycle, complete, path, null, friendship-corona, fan-corona, "
                  "c3-corona, kn-k1")
      ->required();
  gen->add_option("--n", o.n, "Family order parameter");
  gen->add_option("--m", o.m, "Pendants per vertex (null graph order)");

  auto* label = app.add_subcommand("label", "Produce a verified certificate for a graph");
  label->add_option("graph", o.graph_file)->required()->check(CLI::ExistingFile);
  label->add_option("--method", o.method, "thm31 (explicit tables) or solver")
      ->check(CLI::IsMember({"thm31", "solver"}));
  add_search_flags(label, o);

  auto* solve = app.add_subcommand("solve", "Compute the local antimagic chromatic number exactly");
  solve->add_option("graph", o.graph_file)->required()->check(CLI::ExistingFile);
  add_search_flags(solve, o);

  auto* verify = app.add_subcommand("verify", "Check a labeling or certificate against a graph");
  verify->add_option("graph", o.graph_file)->required()->check(CLI::ExistingFile);
  verify->add_option("labeling", o.labeling_file)->required()->check(CLI::ExistingFile);

  auto* bounds = app.add_subcommand("bounds", "Lower/upper/exact values for a family");
  bounds->add_option("family", o.family, "friendship, fan, c3, kn-k1")->required();
  bounds->add_option("--n", o.n);
  bounds->add_option("--m", o.m);

  auto* sweep = app.add_subcommand("sweep", "Evaluate the lower-bound inequalities over a range");
  sweep->add_option("lemma", o.lemma, "lemma21 (friendship) or lemma22 (fan)")->required();
  sweep->add_option("--n-min", o.n_min);
  sweep->add_option("--n-max", o.n_max);
  sweep->add_option("--m-min", o.m_min);
  sweep->add_option("--m-max", o.m_max);
  sweep->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));

  auto* dot = app.add_subcommand("export-dot", "Render a graph (and labeling) as DOT");
  dot->add_option("graph", o.graph_file)->required()->check(CLI::ExistingFile);
  dot->add_option("--labeling", o.labeling_file)->check(CLI::ExistingFile);

  // Global options are accepted after the subcommand too.
  for (auto* sub : {gen, label, solve, verify, bounds, sweep, dot}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    for (auto* sub : app.get_subcommands()) err << sub->help();
    return kUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (label->parsed()) return cmd_label(o, out, err);
    if (solve->parsed()) return cmd_solve(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (bounds->parsed()) return cmd_bounds(o, out, err);
    if (sweep->parsed()) return cmd_sweep(o, out);
    if (dot->parsed()) return cmd_export_dot(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const WrongGraphError& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const ValidationError& e) {
    err << "invalid labeling: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsage;
}

}  // namespace antimagic::cli
