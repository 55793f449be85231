#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

using Label = std::int64_t;
using Weight = std::int64_t;

// Edge index -> label. Bijectivity onto [1, q] is checked by validate(), not
// at construction, so malformed documents can still be represented and
// reported on.
class EdgeLabeling {
 public:
  EdgeLabeling() = default;
  explicit EdgeLabeling(std::vector<Label> labels) : labels_(std::move(labels)) {}

  std::size_t size() const { return labels_.size(); }
  Label operator[](EdgeId e) const { return labels_[e]; }
  std::span<const Label> labels() const { return labels_; }

  // Throws ValidationError naming the first out-of-range, duplicated, or
  // missing label.
  void validate(std::size_t q) const;
  bool is_bijective(std::size_t q) const;

  friend bool operator==(const EdgeLabeling&, const EdgeLabeling&) = default;

 private:
  std::vector<Label> labels_;
};

class WeightMap {
 public:
  WeightMap() = default;
  explicit WeightMap(std::vector<Weight> weights) : weights_(std::move(weights)) {}

  std::size_t size() const { return weights_.size(); }
  Weight operator[](VertexId v) const { return weights_[v]; }
  std::span<const Weight> values() const { return weights_; }

  Weight total() const;
  // Sorted distinct weights: the induced color set.
  std::vector<Weight> color_set() const;
  std::size_t distinct_count() const { return color_set().size(); }

  friend bool operator==(const WeightMap&, const WeightMap&) = default;

 private:
  std::vector<Weight> weights_;
};

struct Verdict {
  // Lowest-indexed edge whose endpoints share a weight; empty when the
  // labeling is local antimagic.
  std::optional<EdgeId> violation;

  bool local_antimagic() const { return !violation.has_value(); }
  static Verdict ok() { return {}; }
  static Verdict violated(EdgeId e) { return {e}; }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct Certificate {
  std::string graph_hash;
  EdgeLabeling labeling;
  WeightMap weights;
  std::size_t color_count = 0;
  Verdict verdict;
};

WeightMap weights(const Graph& g, const EdgeLabeling& f);
Verdict is_local_antimagic(const Graph& g, const EdgeLabeling& f);
std::size_t color_count(const Graph& g, const EdgeLabeling& f);

Certificate make_certificate(const Graph& g, const EdgeLabeling& f);

// Recomputes weights, verdict and color count from the labeling. Throws
// WrongGraphError if the certificate was issued for a different graph; a
// labeling that is no longer bijective simply fails verification.
bool verify_certificate(const Certificate& c, const Graph& g);

}  // namespace antimagic
