#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/oriented.hpp"

namespace rainbow {

using Rng = std::mt19937_64;

/// Independent generator for stream `stream` of a seeded sweep.
Rng make_rng(std::uint64_t seed, std::uint64_t stream);

/// Each pair is an edge with probability `edge_probability`, colored uniformly from
/// 0..colors-1.
EdgeColoredGraph random_colored_graph(Rng& rng, int n, double edge_probability, int colors);

/// Each pair carries an arc with probability `arc_probability`, in a uniformly random
/// direction.
OrientedGraph random_oriented_graph(Rng& rng, int n, double arc_probability);

std::vector<Vertex> random_permutation(Rng& rng, int n);

/// Copy of g with vertex v renamed perm[v].
EdgeColoredGraph relabel_vertices(const EdgeColoredGraph& g, std::span<const Vertex> perm);

inline constexpr int kMaxDescentOrder = 11;

/// Local search over colorings of K_n (optionally with missing edges) for graphs with
/// m + c equal to a target and as few rainbow K_k as possible.
///
/// The state is a color or "absent" per vertex pair. The objective ranks states by the
/// distance |m + c - target| first and by the number of rainbow K_k second. Each draw perturbs the previous
/// state and then walks downhill (ties accepted, rare uphill moves) until the objective
/// reaches `stop_at` or the step budget runs out. Draws from one seed are reproducible.
class RainbowCliqueDescent {
 public:
  static constexpr double kUphillRate = 0.05;

  struct Sample {
    EdgeColoredGraph graph;
    std::int64_t rainbow_cliques = 0;
  };

  /// Requires 3 <= k <= n <= kMaxDescentOrder and a target reachable on n vertices.
  RainbowCliqueDescent(int n, int k, std::int64_t target_mc, bool complete_only, std::uint64_t seed);

  /// Best state on target seen during this draw, or nothing if none was on target.
  std::optional<Sample> next(int max_steps = 4000, std::int64_t stop_at = 0);

 private:
  std::int64_t objective() const;
  std::int64_t gap() const;
  bool accept(std::int64_t before, double roll) const;
  bool subset_rainbow(std::size_t s) const;
  void assign(int slot, int color);
  void randomize();
  void random_move(bool force);
  int fresh_color() const;

  int n_;
  int k_;
  std::int64_t target_;
  bool complete_only_;
  Rng rng_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::vector<std::vector<int>> subsets_;           // edge slots of each k-subset
  std::vector<std::vector<std::size_t>> touching_;  // k-subsets containing each slot
  std::vector<int> color_;                          // -1 = absent
  std::vector<int> class_size_;
  std::vector<unsigned char> rainbow_;
  std::int64_t m_ = 0;
  std::int64_t c_ = 0;
  std::int64_t cliques_ = 0;
  bool fresh_start_ = true;
};

}  // namespace rainbow
