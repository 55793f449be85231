#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/labeling.hpp"

namespace antimagic {

// Labeling matrices for f_n o O_1 with constant column sums. Rows k and
// columns i are 1-based. Odd n uses tables 1 and 2 (3 x n); even n >= 6 uses
// tables 3 and 4 (3 x (n-1)). Row 1 of the second table of each pair repeats
// row 3 of the first: those labels sit on the rung edges u_i v_i.
std::int64_t table1_entry(int k, int i, int n);
std::int64_t table2_entry(int k, int i, int n);
std::int64_t table3_entry(int k, int i, int n);
std::int64_t table4_entry(int k, int i, int n);

enum class MatrixKind { Table1, Table2, Table3, Table4 };

class LabelingMatrix {
 public:
  static LabelingMatrix materialize(MatrixKind kind, int n);

  MatrixKind kind() const { return kind_; }
  int rows() const { return 3; }
  int cols() const { return cols_; }
  std::int64_t at(int k, int i) const { return entries_.at((k - 1) * cols_ + (i - 1)); }
  std::int64_t column_sum(int i) const { return at(1, i) + at(2, i) + at(3, i); }

 private:
  LabelingMatrix(MatrixKind kind, int cols, std::vector<std::int64_t> entries)
      : kind_(kind), cols_(cols), entries_(std::move(entries)) {}

  MatrixKind kind_;
  int cols_;
  std::vector<std::int64_t> entries_;
};

// Column sums every matrix column must hit.
std::int64_t table1_column_sum(int n);  // (21n+3)/2
std::int64_t table2_column_sum(int n);  // (9n+3)/2
std::int64_t table3_column_sum(int n);  // 21n/2+8
std::int64_t table4_column_sum(int n);  // 9n/2+4

enum class Parity { Odd, Even };

enum class ConstructionSource { OddTables, EvenTables, SolverFixture };

struct ClosedForm {
  std::string name;  // e.g. "w(x)", "w(u_i)", "w(u_n)"
  Weight value;
};

struct ConstructionReport {
  int n = 0;
  Parity parity = Parity::Odd;
  ConstructionSource source = ConstructionSource::OddTables;
  Graph graph = friendship_corona(2, 1);
  Certificate certificate;
  // Each closed form has been checked against the recomputed weights.
  std::vector<ClosedForm> closed_forms;
  // Color set printed with the drawn example for this n, when there is one.
  // Kept for comparison only; it is not asserted to equal the computed set.
  std::optional<std::vector<Weight>> caption_colors;
};

ConstructionReport construct_odd(int n);    // odd n >= 3
ConstructionReport construct_even(int n);   // even n >= 6
ConstructionReport construct_small(int n);  // n in {2, 4}, from solver fixtures

// Dispatches on n to one of the three constructions above.
ConstructionReport construct_friendship_corona_o1(int n);

// 2n + 3.
int chi_la_friendship_corona_o1(int n);

// Embedded fixture documents (standard labeling JSON) for n = 2 and n = 4.
std::string_view small_fixture_json(int n);

}  // namespace antimagic
