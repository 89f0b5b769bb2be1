#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Checkable statements:
///   T1  m + c >= C(n+1,2) gives a rainbow triangle.
///   T2  m + c >= C(n+1,2) + k - 1 gives k rainbow triangles.
///   T3  complete, c = n + k - 1, exactly k rainbow triangles, n >= 3k: member of G_k.
///   T4  sum of color degrees >= C(n+1,2) + k - 1 gives k rainbow triangles.
///   T5  m + c >= C(n,2) + t(n,k-2) + 2 gives a rainbow K_k.
///   T6  m + c = C(n,2) + t(n,k-2) + 1, no rainbow K_k, n >= k >= 6: member of H_k.
///   L1  m + c >= C(n+1,2) + k - 1 with exactly k rainbow triangles: equality and complete.
///   L2  oriented graphs: associated coloring identities and the directed-triangle bound.
///   L3  complete, c = t + 1, rainbow spanning T(n,k-2), no rainbow K_k, floor(n/(k-2)) >= 2:
///       one color on all intra-part edges, unused on the Turan subgraph.
///   L4  complete, c = t + 1, no rainbow K_k: a rainbow spanning T(n,k-2) exists.
///   L5  m + c = C(n,2) + t + 1 with no rainbow K_k: complete.
///   P1  m + c >= C(n,2) + t(n,k-2) + 2l gives l rainbow K_k.
enum class TheoremId { T1, T2, T3, T4, T5, T6, L1, L2, L3, L4, L5, P1 };

inline constexpr TheoremId kAllTheorems[] = {TheoremId::T1, TheoremId::T2, TheoremId::T3,
                                            TheoremId::T4, TheoremId::T5, TheoremId::T6,
                                            TheoremId::L1, TheoremId::L2, TheoremId::L3,
                                            TheoremId::L4, TheoremId::L5, TheoremId::P1};

std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view name);

struct VerifyGrid {
  int n_min = 1;
  int n_max = 5;
  int k_min = 1;
  int k_max = 3;
  /// Largest l for P1.
  int ell_max = 2;
  /// Also sweep every spanning subgraph (exhaustive statements, n <= 5).
  bool include_noncomplete = false;
  /// Per (n, k) cell for sampled statements.
  std::int64_t samples = 1000;
  std::uint64_t seed = 0;
  int jobs = 1;
};

/// Reasonable sweep for each statement, sized to finish in seconds to minutes.
VerifyGrid default_grid(TheoremId id);

struct Counterexample {
  std::map<std::string, std::int64_t> params;
  std::string reason;
  EdgeColoredGraph graph;
  /// L2 only: the digraph's arcs, "u v" per arc.
  std::string digraph;
};

struct TightnessWitness {
  std::string label;
  EdgeColoredGraph graph;
  std::int64_t statistic = 0;
  std::int64_t threshold = 0;
  std::int64_t structures = 0;
  /// statistic == threshold - 1 and structures below what the threshold guarantees.
  bool sharp = false;
};

struct VerificationReport {
  TheoremId theorem = TheoremId::T1;
  VerifyGrid grid;
  std::int64_t instances = 0;
  std::int64_t premise_hits = 0;
  /// Total found; only the first few are kept (minimized).
  std::int64_t counterexample_count = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<TightnessWitness> witnesses;
  std::vector<std::string> notes;
  double wall_ms = 0;

  bool passed() const;
};

inline constexpr std::size_t kKeptCounterexamples = 5;

/// Runs one statement over its grid. Exhaustive cells use the coloring enumerator,
/// larger cells sample; work is split into units run on `grid.jobs` threads and merged
/// in unit order, so the report does not depend on the thread count.
VerificationReport verify_theorem(TheoremId id, const VerifyGrid& grid);

/// T1: G_0 on n vertices. T2: G_k (the T2(k+1) witness). T5: H_{n,k-2}.
/// Other statements throw PreconditionError.
EdgeColoredGraph find_tightness_witness(TheoremId id, int n, int k);

/// Recolored G_1: color-degree sum at least C(n+1,2) with one rainbow triangle.
EdgeColoredGraph recolor_witness_colordeg(int n);

std::string to_json(const VerificationReport& report);
std::string to_table(const VerificationReport& report);

}  // namespace rainbow
