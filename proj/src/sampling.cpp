#include "rainbow/sampling.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

EdgeColoredGraph random_colored_graph(Rng& rng, int n, double edge_probability, int colors) {
  if (colors < 1) throw PreconditionError("random_colored_graph needs at least one color");
  std::bernoulli_distribution present(edge_probability);
  std::uniform_int_distribution<std::int64_t> pick(0, colors - 1);
  std::vector<ColoredEdge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (present(rng)) edges.push_back({u, v, ColorId{pick(rng)}});
  return EdgeColoredGraph(n, edges);
}

OrientedGraph random_oriented_graph(Rng& rng, int n, double arc_probability) {
  std::bernoulli_distribution present(arc_probability), flip(0.5);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (present(rng)) arcs.push_back(flip(rng) ? Arc{v, u} : Arc{u, v});
  return OrientedGraph(n, arcs);
}

std::vector<Vertex> random_permutation(Rng& rng, int n) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

EdgeColoredGraph relabel_vertices(const EdgeColoredGraph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.n())
    throw PreconditionError("permutation size does not match graph order");
  std::vector<ColoredEdge> edges;
  edges.reserve(g.edges().size());
  for (const auto& e : g.edges())
    edges.push_back({perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)], e.color});
  return EdgeColoredGraph(g.n(), edges);
}

RainbowCliqueDescent::RainbowCliqueDescent(int n, int k, std::int64_t target_mc, bool complete_only,
                                           std::uint64_t seed)
    : n_(n), k_(k), target_(target_mc), complete_only_(complete_only), rng_(make_rng(seed, 0)) {
  if (k < 3 || n < k || n > kMaxDescentOrder)
    throw PreconditionError("descent sampler requires 3 <= k <= n <= " +
                            std::to_string(kMaxDescentOrder));
  std::vector<std::vector<int>> slot_of(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      slot_of[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = static_cast<int>(pairs_.size());
      pairs_.emplace_back(u, v);
    }
  const auto slots = static_cast<std::int64_t>(pairs_.size());
  if (target_mc > 2 * slots || target_mc < (complete_only ? slots + 1 : 0))
    throw PreconditionError("m + c target " + std::to_string(target_mc) + " unreachable on " +
                            std::to_string(n) + " vertices");

  touching_.resize(pairs_.size());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> slots_in;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if ((mask >> u & 1) && (mask >> v & 1))
          slots_in.push_back(slot_of[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);
    for (int s : slots_in) touching_[static_cast<std::size_t>(s)].push_back(subsets_.size());
    subsets_.push_back(std::move(slots_in));
  }
  color_.assign(pairs_.size(), -1);
  class_size_.assign(pairs_.size() + 1, 0);
  rainbow_.assign(subsets_.size(), 0);
}

bool RainbowCliqueDescent::subset_rainbow(std::size_t s) const {
  std::uint64_t seen = 0;
  for (int slot : subsets_[s]) {
    const int col = color_[static_cast<std::size_t>(slot)];
    if (col < 0) return false;
    const std::uint64_t bit = std::uint64_t{1} << col;
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

std::int64_t RainbowCliqueDescent::objective() const {
  // Being on target outweighs any number of rainbow cliques.
  const auto weight = static_cast<std::int64_t>(subsets_.size()) + 1;
  return cliques_ + weight * gap();
}

std::int64_t RainbowCliqueDescent::gap() const {
  const std::int64_t d = m_ + c_ - target_;
  return d < 0 ? -d : d;
}

// Downhill and level moves always; uphill ones rarely, and never away from the target.
bool RainbowCliqueDescent::accept(std::int64_t before, double roll) const {
  const std::int64_t now = objective();
  if (now <= before) return true;
  const auto weight = static_cast<std::int64_t>(subsets_.size()) + 1;
  return now / weight <= before / weight && roll < kUphillRate;
}

void RainbowCliqueDescent::assign(int slot, int color) {
  auto& cur = color_[static_cast<std::size_t>(slot)];
  if (cur == color) return;
  if (cur >= 0) {
    --m_;
    if (--class_size_[static_cast<std::size_t>(cur)] == 0) --c_;
  }
  cur = color;
  if (cur >= 0) {
    ++m_;
    if (class_size_[static_cast<std::size_t>(cur)]++ == 0) ++c_;
  }
  for (std::size_t s : touching_[static_cast<std::size_t>(slot)]) {
    const unsigned char now = subset_rainbow(s);
    cliques_ += static_cast<int>(now) - static_cast<int>(rainbow_[s]);
    rainbow_[s] = now;
  }
}

int RainbowCliqueDescent::fresh_color() const {
  for (std::size_t col = 0; col < class_size_.size(); ++col)
    if (class_size_[col] == 0) return static_cast<int>(col);
  return 0;  // unreachable: there is one more color id than slots
}

void RainbowCliqueDescent::randomize() {
  const auto slots = static_cast<std::int64_t>(pairs_.size());
  const int colors = static_cast<int>(std::clamp<std::int64_t>(target_ - slots, 1, slots));
  std::uniform_int_distribution<int> pick(0, colors - 1);
  for (std::size_t s = 0; s < pairs_.size(); ++s) assign(static_cast<int>(s), pick(rng_));
}

void RainbowCliqueDescent::random_move(bool force) {
  std::uniform_int_distribution<int> slot_pick(0, static_cast<int>(pairs_.size()) - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const int slot = slot_pick(rng_);
  const int old = color_[static_cast<std::size_t>(slot)];
  const std::int64_t before = objective();
  const double r = coin(rng_);

  if (r < 0.3) {  // swap two slots' colors; m and c stay put
    const int other = slot_pick(rng_);
    const int theirs = color_[static_cast<std::size_t>(other)];
    if (theirs == old) return;
    assign(slot, theirs);
    assign(other, old);
    if (force || accept(before, coin(rng_))) return;
    assign(other, theirs);
    assign(slot, old);
    return;
  }

  int color;
  if (r < 0.7) {
    color = color_[static_cast<std::size_t>(slot_pick(rng_))];
    if (color < 0) color = fresh_color();
  } else if (r < 0.9 || complete_only_) {
    color = fresh_color();
  } else {
    color = -1;
  }
  if (color == old) return;
  assign(slot, color);
  if (force || accept(before, coin(rng_))) return;
  assign(slot, old);
}

std::optional<RainbowCliqueDescent::Sample> RainbowCliqueDescent::next(int max_steps,
                                                                       std::int64_t stop_at) {
  if (fresh_start_) {
    randomize();
    fresh_start_ = false;
  } else {
    const int kicks = std::uniform_int_distribution<int>(2, 5)(rng_);
    for (int i = 0; i < kicks; ++i) random_move(true);
  }

  std::optional<std::vector<int>> best;
  std::int64_t best_cliques = 0;
  auto on_target = [&] { return m_ + c_ == target_; };
  for (int step = 0;; ++step) {
    if (on_target() && (!best || cliques_ < best_cliques)) {
      best = color_;
      best_cliques = cliques_;
    }
    if ((on_target() && cliques_ <= stop_at) || step >= max_steps) break;
    random_move(false);
  }
  if (!best) {
    fresh_start_ = true;
    return std::nullopt;
  }
  std::vector<ColoredEdge> edges;
  for (std::size_t s = 0; s < pairs_.size(); ++s)
    if ((*best)[s] >= 0) edges.push_back({pairs_[s].first, pairs_[s].second, ColorId{(*best)[s]}});
  return Sample{EdgeColoredGraph(n_, edges), best_cliques};
}

}  // namespace rainbow
