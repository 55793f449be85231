#include "antimagic/bounds.hpp"

#include <array>

#include "antimagic/errors.hpp"

namespace antimagic {

namespace {

constexpr std::array<std::pair<GraphFamily, std::string_view>, 4> kFamilyNames{{
    {GraphFamily::FriendshipCorona, "friendship"},
    {GraphFamily::FanCorona, "fan"},
    {GraphFamily::C3Corona, "c3"},
    {GraphFamily::KnK1, "kn-k1"},
}};

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

std::string nm(int n, int m) { return "(n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")"; }

// Edge count of f_n o O_m and F_n o O_m.
std::int64_t friendship_q(std::int64_t n, std::int64_t m) { return m * (2 * n + 1) + 3 * n; }
std::int64_t fan_q(std::int64_t n, std::int64_t m) { return m * (n + 1) + 2 * n - 1; }

InequalityWitness greater(std::string_view name, int n, int m, std::int64_t lhs, std::int64_t rhs) {
  InequalityWitness w;
  w.name = name;
  w.n = n;
  w.m = m;
  w.lhs = lhs;
  w.rhs = rhs;
  w.relation = Relation::Greater;
  w.holds = lhs > rhs;
  return w;
}

}  // namespace

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Lemma21: return "lemma_friendship";
    case Provenance::Lemma22: return "lemma_fan";
    case Provenance::Theorem11: return "known_c3_corona";
    case Provenance::Theorem12: return "known_kn_k1";
    case Provenance::Theorem31: return "friendship_o1_exact";
    case Provenance::Solver: return "solver";
    case Provenance::Construction: return "construction";
  }
  return "solver";
}

std::string_view family_name(GraphFamily f) {
  for (const auto& [k, name] : kFamilyNames)
    if (k == f) return name;
  return "friendship";
}

std::optional<GraphFamily> parse_family(std::string_view name) {
  for (const auto& [k, n] : kFamilyNames)
    if (n == name) return k;
  return std::nullopt;
}

bool BoundReport::consistent() const {
  if (exact && lower > *exact) return false;
  if (exact && upper && *exact > *upper) return false;
  if (upper && lower > *upper) return false;
  return true;
}

std::int64_t lb_friendship(int n, int m) {
  require(n >= 2 && m >= 1, "friendship bound needs n >= 2, m >= 1, got " + nm(n, m));
  const std::int64_t base = static_cast<std::int64_t>(m) * (2LL * n + 1);
  return m == 1 ? base + 2 : base + 3;
}

std::int64_t lb_fan(int n, int m) {
  if (n == 2)
    throw DomainError("F_2 o O_m is C_3 o O_m; use the C3 corona value (" +
                      std::to_string(m >= 1 ? known_exact_c3_corona(m) : 0) + " for m=" +
                      std::to_string(m) + ")");
  require(n >= 3 && m >= 1, "fan bound needs n >= 3, m >= 1, got " + nm(n, m));
  return static_cast<std::int64_t>(m) * (n + 1LL) + 3;
}

std::int64_t known_exact_c3_corona(int m) {
  require(m >= 1, "C3 o O_m needs m >= 1, got " + std::to_string(m));
  return m == 1 ? 5 : 3LL * m + 3;
}

std::int64_t known_exact_kn_k1(int n) {
  require(n >= 2, "K_n o K_1 needs n >= 2, got " + std::to_string(n));
  return 2LL * n - 1;
}

std::int64_t triangular(std::int64_t k) {
  const std::int64_t product = k * (k + 1);
  if (product % 2 != 0) throw ConstructionError("triangular number is not an integer");
  return product / 2;
}

std::int64_t l21_hub_difference_closed(int n, int m) {
  const std::int64_t N = n, M = m;
  return 4 * N * N - 4 * N + M * M - M;
}

std::int64_t l21_case3_difference_closed(int n, int m) {
  const std::int64_t N = n, M = m;
  return 4 * M * M * N * N + 4 * M * N * N - 2 * M * N - 3 * N * N + 5 * N;
}

std::int64_t l21_case2_twice_difference_closed(int n, int m) {
  const std::int64_t N = n, M = m;
  return N * N * (M * M - 2) + N * (2 - M);
}

std::int64_t l22_hub_difference_closed(int n, int m) {
  const std::int64_t N = n, M = m;
  return M * M - M + N * N - 3 * N + 2;
}

std::int64_t l22_case2_bound_times4(int n, int m) {
  const std::int64_t N = n, M = m;
  return N * (M * M * N + N - 6);
}

std::vector<InequalityWitness> sweep_lemma21(int n, int m) {
  require(n >= 2 && m >= 1, "friendship sweep needs n >= 2, m >= 1, got " + nm(n, m));
  const std::int64_t N = n, M = m;
  const std::int64_t q = friendship_q(N, M);
  std::vector<InequalityWitness> out;

  // (a) The hub carries 2n+m distinct labels, so w(x) >= s = T(2n+m) > q.
  {
    auto w = greater(kL21HubWeight, n, m, 2 * triangular(2 * N + M), 2 * q);
    w.printed_difference = 4 * N * N + M * M + M + 1;
    out.push_back(w);
  }
  // (b) With w(v_i) < w(u_i) <= q for all i the n(2m+3) edges at the u_i, v_i
  // sum to at least T(n(2m+3)) but at most n(2q-1); compared at twice scale.
  {
    const std::int64_t a = N * (2 * M + 3);
    auto w = greater(kL21Case3, n, m, 2 * triangular(a), 2 * N * (2 * q - 1));
    w.printed_difference = l21_case3_difference_closed(n, m);
    out.push_back(w);
  }
  // (c) n light vertices of degree m+2 on disjoint edges need at least
  // T(n(m+2)) in labels, against a ceiling of nq.
  {
    const std::int64_t a = N * (M + 2);
    auto w = greater(kL21Case2, n, m, triangular(a), N * q);
    w.printed_difference = a * (a + 1) - N * (3 * N + M * (N + 1));
    out.push_back(w);
  }
  return out;
}

std::vector<InequalityWitness> sweep_lemma22(int n, int m) {
  require(n >= 3 && m >= 1, "fan sweep needs n >= 3, m >= 1, got " + nm(n, m));
  const std::int64_t N = n, M = m;
  const std::int64_t q = fan_q(N, M);
  std::vector<InequalityWitness> out;

  {
    auto w = greater(kL22HubWeight, n, m, 2 * triangular(M + N), 2 * q);
    w.printed_difference = M * M - M + N * N - 3 * N + 1;
    out.push_back(w);
  }
  for (int r = 1; r <= n - 1; ++r) {
    const std::int64_t R = r;
    const std::int64_t light = N - R;
    const std::int64_t edges = (M + 1) * light + N - 1;
    auto w = greater(kL22Case2Exact, n, m, 2 * triangular(edges), 2 * light * q);
    w.r = r;
    w.in_proof_scope = 2 * light >= N;
    const std::int64_t t = edges + 1;
    w.printed_difference = t * t - t - 2 * light * (M * (N + 1) + 2 * N);
    out.push_back(w);

    InequalityWitness id;
    id.name = kL22EdgeCount;
    id.n = n;
    id.m = m;
    id.r = r;
    id.lhs = (M + 2) * N - 1 - R * (M + 1);
    id.rhs = edges;
    id.relation = Relation::Equal;
    id.holds = id.lhs == id.rhs;
    id.in_proof_scope = w.in_proof_scope;
    out.push_back(id);
  }
  // Closing bound shared by every in-scope r, at four times scale.
  out.push_back(greater(kL22Case2Bound, n, m, l22_case2_bound_times4(n, m), 0));
  if (n == 3 && m == 1) {
    // v_1 and v_3 meet six distinct edges: at least 21 against 2q = 18.
    out.push_back(greater(kL22F3O1, n, m, triangular(6), 2 * q));
  }
  return out;
}

std::vector<InequalityWitness> sweep_lemma21(const SweepRange& range) {
  std::vector<InequalityWitness> out;
  for (int n = range.n_min; n <= range.n_max; ++n)
    for (int m = range.m_min; m <= range.m_max; ++m) {
      auto part = sweep_lemma21(n, m);
      out.insert(out.end(), part.begin(), part.end());
    }
  return out;
}

std::vector<InequalityWitness> sweep_lemma22(const SweepRange& range) {
  std::vector<InequalityWitness> out;
  for (int n = range.n_min; n <= range.n_max; ++n)
    for (int m = range.m_min; m <= range.m_max; ++m) {
      auto part = sweep_lemma22(n, m);
      out.insert(out.end(), part.begin(), part.end());
    }
  return out;
}

BoundReport bound_report(GraphFamily family, int n, int m) {
  BoundReport r;
  r.family = family;
  r.n = n;
  r.m = m;
  switch (family) {
    case GraphFamily::FriendshipCorona: {
      const std::int64_t lemma = lb_friendship(n, m);
      r.raw_lemma_lower = lemma;
      r.lower = lemma;
      r.lower_provenance = Provenance::Lemma21;
      if (m == 1) {
        const std::int64_t exact = 2LL * n + 3;
        r.lower = std::max(lemma, exact);
        r.lower_provenance = Provenance::Theorem31;
        r.exact = exact;
        r.exact_provenance = Provenance::Theorem31;
        // Every n >= 2 has a certificate: tables for n = 3 and n >= 5,
        // solver fixtures for n = 2, 4.
        r.upper = exact;
        r.upper_provenance = Provenance::Construction;
      }
      break;
    }
    case GraphFamily::FanCorona: {
      const std::int64_t lemma = lb_fan(n, m);
      r.raw_lemma_lower = lemma;
      r.lower = lemma;
      r.lower_provenance = Provenance::Lemma22;
      break;
    }
    case GraphFamily::C3Corona: {
      const std::int64_t exact = known_exact_c3_corona(m);
      r.lower = exact;
      r.lower_provenance = Provenance::Theorem11;
      r.exact = exact;
      r.exact_provenance = Provenance::Theorem11;
      break;
    }
    case GraphFamily::KnK1: {
      const std::int64_t exact = known_exact_kn_k1(n);
      r.lower = exact;
      r.lower_provenance = Provenance::Theorem12;
      r.exact = exact;
      r.exact_provenance = Provenance::Theorem12;
      break;
    }
  }
  if (!r.consistent()) throw ConstructionError("inconsistent bound report for " + nm(n, m));
  return r;
}

void merge_upper(BoundReport& report, std::int64_t upper, Provenance source) {
  BoundReport next = report;
  if (!next.upper || upper < *next.upper) {
    next.upper = upper;
    next.upper_provenance = source;
  }
  if (!next.consistent())
    throw ConstructionError("upper bound " + std::to_string(upper) + " contradicts the report");
  report = next;
}

void merge_exact(BoundReport& report, std::int64_t exact, Provenance source) {
  BoundReport next = report;
  if (!next.exact) {
    next.exact = exact;
    next.exact_provenance = source;
  } else if (*next.exact != exact) {
    throw ConstructionError("exact value " + std::to_string(exact) + " contradicts " +
                            std::to_string(*next.exact));
  }
  if (next.lower < exact) {
    next.lower = exact;
    next.lower_provenance = source;
  }
  if (!next.upper || exact < *next.upper) {
    next.upper = exact;
    next.upper_provenance = source;
  }
  if (!next.consistent())
    throw ConstructionError("exact value " + std::to_string(exact) + " contradicts the report");
  report = next;
}

}  // namespace antimagic
