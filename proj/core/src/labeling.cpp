#include "antimagic/labeling.hpp"

#include <algorithm>
#include <numeric>

#include "antimagic/errors.hpp"

namespace antimagic {

void EdgeLabeling::validate(std::size_t q) const {
  if (labels_.size() != q)
    throw ValidationError("labeling has " + std::to_string(labels_.size()) +
                          " labels for a graph with " + std::to_string(q) + " edges");
  const auto top = static_cast<Label>(q);
  std::vector<EdgeId> owner(q + 1, 0);
  std::vector<char> seen(q + 1, 0);
  for (EdgeId e = 0; e < labels_.size(); ++e) {
    const Label l = labels_[e];
    if (l < 1 || l > top)
      throw ValidationError("label " + std::to_string(l) + " on edge " + std::to_string(e) +
                            " is outside [1," + std::to_string(q) + "]");
    if (seen[l]) {
      std::size_t missing = 1;
      std::vector<char> present(q + 1, 0);
      for (Label x : labels_)
        if (x >= 1 && x <= top) present[x] = 1;
      while (missing <= q && present[missing]) ++missing;
      throw ValidationError("label " + std::to_string(l) + " is duplicated on edges " +
                            std::to_string(owner[l]) + " and " + std::to_string(e) +
                            "; label " + std::to_string(missing) + " is missing");
    }
    seen[l] = 1;
    owner[l] = e;
  }
}

bool EdgeLabeling::is_bijective(std::size_t q) const {
  try {
    validate(q);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

Weight WeightMap::total() const { return std::accumulate(weights_.begin(), weights_.end(), Weight{0}); }

std::vector<Weight> WeightMap::color_set() const {
  std::vector<Weight> colors = weights_;
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  return colors;
}

WeightMap weights(const Graph& g, const EdgeLabeling& f) {
  f.validate(g.size());
  std::vector<Weight> w(g.order(), 0);
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    w[ed.u] += f[e];
    w[ed.v] += f[e];
  }
  return WeightMap(std::move(w));
}

namespace {

Verdict verdict_for(const Graph& g, const WeightMap& w) {
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    if (w[ed.u] == w[ed.v]) return Verdict::violated(e);
  }
  return Verdict::ok();
}

}  // namespace

Verdict is_local_antimagic(const Graph& g, const EdgeLabeling& f) {
  return verdict_for(g, weights(g, f));
}

std::size_t color_count(const Graph& g, const EdgeLabeling& f) {
  return weights(g, f).distinct_count();
}

Certificate make_certificate(const Graph& g, const EdgeLabeling& f) {
  Certificate c;
  c.graph_hash = g.content_hash();
  c.labeling = f;
  c.weights = weights(g, f);
  c.verdict = verdict_for(g, c.weights);
  c.color_count = c.weights.distinct_count();
  return c;
}

bool verify_certificate(const Certificate& c, const Graph& g) {
  if (c.graph_hash != g.content_hash())
    throw WrongGraphError("certificate is for graph " + c.graph_hash + ", not " + g.content_hash());
  if (!c.labeling.is_bijective(g.size())) return false;
  const WeightMap w = weights(g, c.labeling);
  return w == c.weights && verdict_for(g, w) == c.verdict && w.distinct_count() == c.color_count;
}

}  // namespace antimagic
