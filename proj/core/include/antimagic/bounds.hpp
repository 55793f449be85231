#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace antimagic {

enum class Provenance { Lemma21, Lemma22, Theorem11, Theorem12, Theorem31, Solver, Construction };

std::string_view provenance_name(Provenance p);

enum class GraphFamily { FriendshipCorona, FanCorona, C3Corona, KnK1 };

std::string_view family_name(GraphFamily f);
std::optional<GraphFamily> parse_family(std::string_view name);

struct BoundReport {
  GraphFamily family = GraphFamily::FriendshipCorona;
  int n = 0;
  int m = 0;
  std::int64_t lower = 0;
  Provenance lower_provenance = Provenance::Lemma21;
  // Lemma value before any exact result overrides it.
  std::optional<std::int64_t> raw_lemma_lower;
  std::optional<std::int64_t> upper;
  std::optional<Provenance> upper_provenance;
  std::optional<std::int64_t> exact;
  std::optional<Provenance> exact_provenance;

  // lower <= exact <= upper wherever the fields are present.
  bool consistent() const;
};

// m(2n+1)+2 for m = 1, m(2n+1)+3 otherwise. n >= 2, m >= 1.
std::int64_t lb_friendship(int n, int m);
// m(n+1)+3 for n >= 3. n = 2 throws a DomainError pointing at C3 o O_m.
std::int64_t lb_fan(int n, int m);
// 5 for m = 1, 3m+3 otherwise.
std::int64_t known_exact_c3_corona(int m);
// 2n-1 for n >= 2.
std::int64_t known_exact_kn_k1(int n);

enum class Relation { Greater, Equal };

// One evaluated inequality (or identity) from the lower-bound arguments.
// `lhs` and `rhs` are computed from the unsimplified definitions; the
// `printed_difference`, when present, is the simplified difference as it is
// printed in the source argument, kept alongside so disagreements are visible.
struct InequalityWitness {
  std::string name;
  int n = 0;
  int m = 0;
  std::optional<int> r;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  Relation relation = Relation::Greater;
  bool holds = false;
  std::optional<std::int64_t> printed_difference;
  // Only meaningful for witnesses that take r: whether n - r >= n/2.
  bool in_proof_scope = true;

  std::int64_t difference() const { return lhs - rhs; }
  bool printed_agrees() const { return !printed_difference || *printed_difference == difference(); }
};

// Witness names.
inline constexpr std::string_view kL21HubWeight = "l21_hub_weight";        // (a)
inline constexpr std::string_view kL21Case3 = "l21_case3_pair_sums";       // (b)
inline constexpr std::string_view kL21Case2 = "l21_case2_heavy_sum";       // (c)
inline constexpr std::string_view kL22HubWeight = "l22_hub_weight";        // (a)
inline constexpr std::string_view kL22Case2Exact = "l22_case2_exact";      // (b) per r
inline constexpr std::string_view kL22Case2Bound = "l22_case2_bound";      // (b) closing bound
inline constexpr std::string_view kL22EdgeCount = "l22_edge_count";        // (c)
inline constexpr std::string_view kL22F3O1 = "l22_f3o1_refinement";

std::int64_t triangular(std::int64_t k);

std::vector<InequalityWitness> sweep_lemma21(int n, int m);
std::vector<InequalityWitness> sweep_lemma22(int n, int m);

struct SweepRange {
  int n_min;
  int n_max;
  int m_min;
  int m_max;
};

std::vector<InequalityWitness> sweep_lemma21(const SweepRange& range);
std::vector<InequalityWitness> sweep_lemma22(const SweepRange& range);

// Simplified polynomial forms of each difference, derived independently of
// the lhs/rhs definitions; the two must agree.
std::int64_t l21_hub_difference_closed(int n, int m);      // 4n^2 - 4n + m^2 - m
std::int64_t l21_case3_difference_closed(int n, int m);    // 4m^2n^2 + 4mn^2 - 2mn - 3n^2 + 5n
std::int64_t l21_case2_twice_difference_closed(int n, int m);  // n^2(m^2-2) + n(2-m)
std::int64_t l22_hub_difference_closed(int n, int m);      // m^2 - m + n^2 - 3n + 2
// Four times the closing bound (n/2)[m^2 n/2 + n/2 - 3] = n(m^2 n + n - 6).
std::int64_t l22_case2_bound_times4(int n, int m);

BoundReport bound_report(GraphFamily family, int n, int m);

// Folds an externally established result (solver run, cached certificate)
// into a report. Throws ConstructionError if that would break consistency.
void merge_upper(BoundReport& report, std::int64_t upper, Provenance source);
void merge_exact(BoundReport& report, std::int64_t exact, Provenance source);

}  // namespace antimagic
