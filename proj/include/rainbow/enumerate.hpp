#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

struct ClassConstraint {
  enum class Kind { any, exactly, at_most };
  Kind kind = Kind::any;
  int classes = 0;

  static ClassConstraint unconstrained() { return {}; }
  static ClassConstraint exactly(int c) { return {Kind::exactly, c}; }
  static ClassConstraint at_most(int c) { return {Kind::at_most, c}; }
};

/// One independently enumerable slice: an edge subset plus a fixed restricted-growth prefix.
struct WorkUnit {
  std::uint64_t edge_mask = 0;
  std::vector<std::uint8_t> prefix;
};

inline constexpr double kDefaultEnumerationBudget = 2e9;
inline constexpr int kMaxEnumerationOrder = 7;

/// Every coloring of K_n (or, optionally, of every spanning subgraph of K_n) up to color
/// renaming, emitted once each.
///
/// Edge slots are the pairs {u,v}, u < v, in lexicographic order. A coloring is a set
/// partition of the present slots written as a restricted-growth string, so the emitted
/// graph's colors are already canonical (0..c-1 by first appearance).
class ColoringEnumerator {
 public:
  /// Throws BudgetExceeded when the instance count estimate exceeds `budget`, and
  /// PreconditionError when n > kMaxEnumerationOrder.
  ColoringEnumerator(int n, ClassConstraint constraint, bool all_edge_subsets = false,
                     double budget = kDefaultEnumerationBudget);

  int n() const noexcept { return n_; }
  int slots() const noexcept { return static_cast<int>(pairs_.size()); }
  /// Number of colorings that will be emitted (Bell/Stirling sums, as a double).
  double expected_count() const noexcept { return expected_; }

  std::vector<WorkUnit> work_units(int prefix_length = 5) const;

  template <class Visit>
  void for_each_in(const WorkUnit& unit, Visit&& visit) const;

  template <class Visit>
  void for_each(Visit&& visit) const {
    for (const auto& unit : work_units()) for_each_in(unit, visit);
  }

 private:
  struct Cursor {
    std::vector<int> slot;  // edge slot of each position
    std::vector<std::uint8_t> rgs;
    std::vector<ColoredEdge> edges;
  };

  bool admissible(int classes, int remaining) const;
  bool complete_ok(int classes) const;

  template <class Visit>
  void descend(Cursor& cur, std::size_t pos, int classes, Visit& visit) const;

  void prefixes(std::uint64_t mask, int length, std::vector<WorkUnit>& out) const;

  int n_;
  ClassConstraint constraint_;
  bool all_subsets_;
  double expected_ = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
};

/// S(s, c) and Bell(s) as doubles, for budget estimates.
double stirling2(int s, int c);
double bell(int s);

template <class Visit>
void ColoringEnumerator::for_each_in(const WorkUnit& unit, Visit&& visit) const {
  Cursor cur;
  for (int i = 0; i < slots(); ++i)
    if (unit.edge_mask >> i & 1) cur.slot.push_back(i);
  cur.rgs.assign(cur.slot.size(), 0);
  cur.edges.resize(cur.slot.size());
  int classes = 0;
  for (std::size_t i = 0; i < unit.prefix.size(); ++i) {
    cur.rgs[i] = unit.prefix[i];
    classes = std::max(classes, unit.prefix[i] + 1);
  }
  descend(cur, unit.prefix.size(), classes, visit);
}

template <class Visit>
void ColoringEnumerator::descend(Cursor& cur, std::size_t pos, int classes, Visit& visit) const {
  const auto length = cur.slot.size();
  if (pos == length) {
    if (!complete_ok(classes)) return;
    for (std::size_t i = 0; i < length; ++i) {
      const auto& [u, v] = pairs_[static_cast<std::size_t>(cur.slot[i])];
      cur.edges[i] = {u, v, ColorId{cur.rgs[i]}};
    }
    const EdgeColoredGraph g(n_, cur.edges);
    visit(g);
    return;
  }
  const int remaining = static_cast<int>(length - pos) - 1;
  for (int c = 0; c <= classes; ++c) {
    const int next = std::max(classes, c + 1);
    if (!admissible(next, remaining)) continue;
    cur.rgs[pos] = static_cast<std::uint8_t>(c);
    descend(cur, pos + 1, next, visit);
  }
}

}  // namespace rainbow
