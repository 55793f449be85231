#include "antimagic/construction.hpp"

#include <algorithm>

#include "antimagic/errors.hpp"
#include "antimagic/io.hpp"
#include "fixtures_embedded.hpp"

namespace antimagic {

namespace {

std::int64_t half(std::int64_t x) {
  if (x % 2 != 0)
    throw ConstructionError("expected an even numerator, got " + std::to_string(x));
  return x / 2;
}

void require_odd(int n) {
  if (n < 3 || n % 2 == 0)
    throw DomainError("odd-case tables need odd n >= 3, got " + std::to_string(n));
}

void require_even(int n) {
  if (n < 6 || n % 2 != 0)
    throw DomainError("even-case tables need even n >= 6, got " + std::to_string(n));
}

void require_cell(int k, int i, int cols) {
  if (k < 1 || k > 3 || i < 1 || i > cols)
    throw DomainError("cell (" + std::to_string(k) + "," + std::to_string(i) +
                      ") outside a 3x" + std::to_string(cols) + " matrix");
}

}  // namespace

std::int64_t table1_entry(int k, int i, int n) {
  require_odd(n);
  require_cell(k, i, n);
  const std::int64_t N = n, I = i;
  const bool odd_col = i % 2 == 1;
  switch (k) {
    case 1: return odd_col ? 4 * N + half(I + 1) : half(9 * N + 1) + half(I);
    case 2: return odd_col ? half(7 * N + 1) + half(I - 1) : 3 * N + half(I);
    default: return 3 * N + 1 - I;
  }
}

std::int64_t table2_entry(int k, int i, int n) {
  require_odd(n);
  require_cell(k, i, n);
  const std::int64_t N = n, I = i;
  const bool odd_col = i % 2 == 1;
  switch (k) {
    case 1: return 3 * N + 1 - I;
    case 2: return odd_col ? half(3 * N + 1) + half(I - 1) : N + half(I);
    default: return odd_col ? half(I + 1) : half(N + 1) + half(I);
  }
}

std::int64_t table3_entry(int k, int i, int n) {
  require_even(n);
  require_cell(k, i, n - 1);
  const std::int64_t N = n, I = i;
  const bool odd_col = i % 2 == 1;
  switch (k) {
    case 1: return odd_col ? 4 * N + 3 + half(I - 1) : half(9 * N) + 2 + half(I);
    case 2: return odd_col ? half(7 * N) + 3 + half(I - 1) : 3 * N + 3 + half(I);
    default: return 3 * N + 3 - I;
  }
}

std::int64_t table4_entry(int k, int i, int n) {
  require_even(n);
  require_cell(k, i, n - 1);
  const std::int64_t N = n, I = i;
  const bool odd_col = i % 2 == 1;
  switch (k) {
    case 1: return 3 * N + 3 - I;
    case 2: return odd_col ? half(3 * N) + half(I - 1) : N + half(I);
    default: return odd_col ? half(I + 3) : half(N) + 1 + half(I);
  }
}

std::int64_t table1_column_sum(int n) { require_odd(n); return half(21LL * n + 3); }
std::int64_t table2_column_sum(int n) { require_odd(n); return half(9LL * n + 3); }
std::int64_t table3_column_sum(int n) { require_even(n); return half(21LL * n) + 8; }
std::int64_t table4_column_sum(int n) { require_even(n); return half(9LL * n) + 4; }

LabelingMatrix LabelingMatrix::materialize(MatrixKind kind, int n) {
  using Entry = std::int64_t (*)(int, int, int);
  Entry entry = nullptr;
  int cols = 0;
  switch (kind) {
    case MatrixKind::Table1: entry = table1_entry; require_odd(n); cols = n; break;
    case MatrixKind::Table2: entry = table2_entry; require_odd(n); cols = n; break;
    case MatrixKind::Table3: entry = table3_entry; require_even(n); cols = n - 1; break;
    case MatrixKind::Table4: entry = table4_entry; require_even(n); cols = n - 1; break;
  }
  std::vector<std::int64_t> cells;
  cells.reserve(3 * cols);
  for (int k = 1; k <= 3; ++k)
    for (int i = 1; i <= cols; ++i) cells.push_back(entry(k, i, n));
  return LabelingMatrix(kind, cols, std::move(cells));
}

namespace {

std::optional<std::vector<Weight>> caption_colors_for(int n) {
  auto range = [](std::vector<Weight> out, Weight lo, Weight hi) {
    for (Weight w = lo; w <= hi; ++w) out.push_back(w);
    return out;
  };
  switch (n) {
    case 2: return std::vector<Weight>{5, 7, 9, 10, 11, 20, 28};
    case 3: {
      auto c = range(range({}, 1, 3), 13, 16);
      c.insert(c.end(), {33, 64});
      return c;
    }
    case 4: return std::vector<Weight>{5, 6, 7, 9, 10, 16, 17, 18, 21, 46, 85};
    case 6: {
      auto c = range({}, 1, 6);
      c.push_back(21);
      c = range(std::move(c), 27, 31);
      c.insert(c.end(), {71, 211});
      return c;
    }
    default: return std::nullopt;
  }
}

// Builds the certificate and cross-checks every closed form against it.
ConstructionReport finish(int n, ConstructionSource source, Graph g, EdgeLabeling f,
                          std::vector<std::pair<ClosedForm, std::vector<VertexId>>> forms) {
  ConstructionReport report{.n = n,
                            .parity = n % 2 == 0 ? Parity::Even : Parity::Odd,
                            .source = source,
                            .graph = std::move(g),
                            .certificate = {},
                            .closed_forms = {},
                            .caption_colors = caption_colors_for(n)};
  report.certificate = make_certificate(report.graph, f);
  const Certificate& c = report.certificate;
  if (!c.verdict.local_antimagic())
    throw ConstructionError("construction for n=" + std::to_string(n) +
                            " is not local antimagic at edge " +
                            std::to_string(*c.verdict.violation));
  const auto expected = static_cast<std::size_t>(chi_la_friendship_corona_o1(n));
  if (c.color_count != expected)
    throw ConstructionError("construction for n=" + std::to_string(n) + " induces " +
                            std::to_string(c.color_count) + " colors, expected " +
                            std::to_string(expected));
  for (auto& [form, vertices] : forms) {
    for (VertexId v : vertices)
      if (c.weights[v] != form.value)
        throw ConstructionError(form.name + " = " + std::to_string(form.value) +
                                " disagrees with recomputed weight " +
                                std::to_string(c.weights[v]) + " of " +
                                report.graph.vertex_name(v));
    report.closed_forms.push_back(std::move(form));
  }
  return report;
}

}  // namespace

ConstructionReport construct_odd(int n) {
  require_odd(n);
  const FriendshipCoronaLayout at{n, 1};
  Graph g = friendship_corona(n, 1);
  std::vector<Label> labels(g.size(), 0);
  for (int i = 1; i <= n; ++i) {
    labels[at.u_pendant(i, 1)] = table1_entry(1, i, n);
    labels[at.hub_u(i)] = table1_entry(2, i, n);
    labels[at.rung(i)] = table1_entry(3, i, n);
    labels[at.hub_v(i)] = table2_entry(2, i, n);
    labels[at.v_pendant(i, 1)] = table2_entry(3, i, n);
  }
  labels[at.hub_pendant(1)] = 5LL * n + 1;

  std::vector<VertexId> us, vs;
  for (int i = 1; i <= n; ++i) {
    us.push_back(at.u(i));
    vs.push_back(at.v(i));
  }
  const std::int64_t N = n;
  const VertexId x1 = g.edge(at.hub_pendant(1)).v;
  return finish(n, ConstructionSource::OddTables, std::move(g), EdgeLabeling(std::move(labels)),
                {{{"w(x)", (N + 1) * (5 * N + 1)}, {at.hub()}},
                 {{"w(u_i)", table1_column_sum(n)}, us},
                 {{"w(v_i)", table2_column_sum(n)}, vs},
                 {{"w(x_1)", 5 * N + 1}, {x1}}});
}

ConstructionReport construct_even(int n) {
  require_even(n);
  const FriendshipCoronaLayout at{n, 1};
  Graph g = friendship_corona(n, 1);
  const std::int64_t N = n;
  std::vector<Label> labels(g.size(), 0);
  labels[at.hub_pendant(1)] = 3 * N + 3;
  labels[at.rung(n)] = 1;
  labels[at.u_pendant(n, 1)] = 2 * N + 2;
  labels[at.hub_u(n)] = 2 * N;
  labels[at.v_pendant(n, 1)] = 2 * N + 3;
  labels[at.hub_v(n)] = 2 * N + 1;
  for (int i = 1; i <= n - 1; ++i) {
    labels[at.u_pendant(i, 1)] = table3_entry(1, i, n);
    labels[at.hub_u(i)] = table3_entry(2, i, n);
    labels[at.rung(i)] = table3_entry(3, i, n);
    labels[at.hub_v(i)] = table4_entry(2, i, n);
    labels[at.v_pendant(i, 1)] = table4_entry(3, i, n);
  }

  std::vector<VertexId> us, vs;
  for (int i = 1; i <= n - 1; ++i) {
    us.push_back(at.u(i));
    vs.push_back(at.v(i));
  }
  const VertexId x1 = g.edge(at.hub_pendant(1)).v;
  const VertexId un1 = g.edge(at.u_pendant(n, 1)).v;
  const VertexId vn1 = g.edge(at.v_pendant(n, 1)).v;
  return finish(n, ConstructionSource::EvenTables, std::move(g), EdgeLabeling(std::move(labels)),
                {{{"w(x)", 5 * N * N + 5 * N + 1}, {at.hub()}},
                 {{"w(u_i)", table3_column_sum(n)}, us},
                 {{"w(v_i)", table4_column_sum(n)}, vs},
                 {{"w(u_n)", 4 * N + 3}, {at.u(n)}},
                 {{"w(v_n)", 4 * N + 5}, {at.v(n)}},
                 {{"w(x_1)", 3 * N + 3}, {x1}},
                 {{"w(u^n_1)", 2 * N + 2}, {un1}},
                 {{"w(v^n_1)", 2 * N + 3}, {vn1}}});
}

std::string_view small_fixture_json(int n) {
  switch (n) {
    case 2: return fixtures::kFriendship2Corona1;
    case 4: return fixtures::kFriendship4Corona1;
    default:
      throw DomainError("solver fixtures exist for n in {2,4}, got " + std::to_string(n));
  }
}

ConstructionReport construct_small(int n) {
  if (n != 2 && n != 4)
    throw DomainError("small-case certificates exist for n in {2,4}, got " + std::to_string(n));
  Graph g = friendship_corona(n, 1);
  const LabelingDocument doc = labeling_from_json(small_fixture_json(n));
  if (doc.graph_hash != g.content_hash())
    throw NotFoundError("fixture for n=" + std::to_string(n) + " was issued for graph " +
                        doc.graph_hash + ", expected " + g.content_hash());
  return finish(n, ConstructionSource::SolverFixture, std::move(g), doc.labeling, {});
}

ConstructionReport construct_friendship_corona_o1(int n) {
  if (n < 2) throw DomainError("f_n o O_1 needs n >= 2, got " + std::to_string(n));
  if (n == 2 || n == 4) return construct_small(n);
  return n % 2 == 1 ? construct_odd(n) : construct_even(n);
}

int chi_la_friendship_corona_o1(int n) {
  if (n < 2) throw DomainError("f_n o O_1 needs n >= 2, got " + std::to_string(n));
  return 2 * n + 3;
}

}  // namespace antimagic
