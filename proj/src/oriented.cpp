#include "rainbow/oriented.hpp"

#include <algorithm>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

OrientedGraph::OrientedGraph(int n) : OrientedGraph(n, std::span<const Arc>{}) {}

OrientedGraph::OrientedGraph(int n, std::span<const Arc> arcs) : n_(n), arcs_(arcs.begin(), arcs.end()) {
  if (n < 0 || n > kMaxVertices)
    throw InvalidInput("vertex count " + std::to_string(n) + " outside [0, " +
                       std::to_string(kMaxVertices) + "]");
  for (const auto& a : arcs_) {
    if (a.tail == a.head) throw InvalidInput("loop at vertex " + std::to_string(a.tail));
    if (a.tail < 0 || a.head < 0 || a.tail >= n || a.head >= n)
      throw InvalidInput("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                         ") has an endpoint outside [0, " + std::to_string(n) + ")");
  }
  std::sort(arcs_.begin(), arcs_.end());
  for (std::size_t i = 1; i < arcs_.size(); ++i)
    if (arcs_[i] == arcs_[i - 1])
      throw InvalidInput("repeated arc (" + std::to_string(arcs_[i].tail) + "," +
                         std::to_string(arcs_[i].head) + ")");
  for (const auto& a : arcs_)
    if (std::binary_search(arcs_.begin(), arcs_.end(), Arc{a.head, a.tail}))
      throw InvalidInput("digon between " + std::to_string(std::min(a.tail, a.head)) + " and " +
                         std::to_string(std::max(a.tail, a.head)));

  out_.assign(static_cast<std::size_t>(n), {});
  in_.assign(static_cast<std::size_t>(n), {});
  for (const auto& a : arcs_) {
    out_[static_cast<std::size_t>(a.tail)].push_back(a.head);
    in_[static_cast<std::size_t>(a.head)].push_back(a.tail);
  }
  for (auto& row : in_) std::sort(row.begin(), row.end());
}

bool OrientedGraph::has_arc(Vertex tail, Vertex head) const {
  if (tail < 0 || tail >= n_) return false;
  const auto& row = out_[static_cast<std::size_t>(tail)];
  return std::binary_search(row.begin(), row.end(), head);
}

}  // namespace rainbow
