#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "antimagic/bounds.hpp"
#include "antimagic/construction.hpp"
#include "antimagic/graph.hpp"
#include "antimagic/labeling.hpp"
#include "antimagic/solver.hpp"

namespace antimagic {

// Every document carries "schema_version": "<major>.<minor>"; readers refuse
// any major version other than this one.
inline constexpr int kSchemaMajor = 1;
inline constexpr std::string_view kSchemaVersion = "1.0";

// All readers throw ParseError naming the offending location.

std::string graph_to_json(const Graph& g);
Graph graph_from_json(std::string_view text);

struct LabelingDocument {
  std::string graph_hash;
  EdgeLabeling labeling;
};

std::string labeling_to_json(const std::string& graph_hash, const EdgeLabeling& f);
// Also accepts certificate documents, which are a superset.
LabelingDocument labeling_from_json(std::string_view text);

std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(std::string_view text);

std::string construction_report_to_json(const ConstructionReport& r);
std::string bound_report_to_json(const BoundReport& r);
std::string search_outcome_to_json(const SearchOutcome& o);
SearchOutcome search_outcome_from_json(std::string_view text);

std::string sweep_to_csv(const std::vector<InequalityWitness>& witnesses);
std::string sweep_to_json(const std::vector<InequalityWitness>& witnesses);

// Undirected DOT; vertex labels carry the role name and, when a labeling is
// supplied, the induced weight, with edge labels on the edges.
std::string to_dot(const Graph& g, const EdgeLabeling* f = nullptr);

}  // namespace antimagic
