#include "rainbow/enumerate.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

double stirling2(int s, int c) {
  if (s < 0 || c < 0) return 0;
  std::vector<double> row(static_cast<std::size_t>(c) + 1, 0.0);
  row[0] = 1;  // S(0,0)
  for (int i = 1; i <= s; ++i)
    for (int j = std::min(i, c); j >= 0; --j)
      row[static_cast<std::size_t>(j)] =
          j == 0 ? 0 : j * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j) - 1];
  return row[static_cast<std::size_t>(c)];
}

double bell(int s) {
  double total = 0;
  for (int c = 0; c <= s; ++c) total += stirling2(s, c);
  return total;
}

ColoringEnumerator::ColoringEnumerator(int n, ClassConstraint constraint, bool all_edge_subsets,
                                       double budget)
    : n_(n), constraint_(constraint), all_subsets_(all_edge_subsets) {
  if (n < 0 || n > kMaxEnumerationOrder)
    throw PreconditionError("coloring enumeration supports 0 <= n <= " +
                            std::to_string(kMaxEnumerationOrder));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs_.emplace_back(u, v);

  const int slots = static_cast<int>(pairs_.size());
  auto per_size = [&](int j) {
    switch (constraint_.kind) {
      case ClassConstraint::Kind::exactly: return stirling2(j, constraint_.classes);
      case ClassConstraint::Kind::at_most: {
        double s = 0;
        for (int c = 0; c <= constraint_.classes; ++c) s += stirling2(j, c);
        return s;
      }
      case ClassConstraint::Kind::any: break;
    }
    return bell(j);
  };
  if (all_subsets_) {
    double binom = 1;
    for (int j = 0; j <= slots; ++j) {
      expected_ += binom * per_size(j);
      binom = binom * (slots - j) / (j + 1);
    }
  } else {
    expected_ = per_size(slots);
  }
  if (expected_ > budget) {
    std::ostringstream msg;
    msg << "enumeration of " << expected_ << " colorings of K_" << n << " exceeds budget "
        << budget;
    throw BudgetExceeded(msg.str(), expected_);
  }
}

bool ColoringEnumerator::admissible(int classes, int remaining) const {
  switch (constraint_.kind) {
    case ClassConstraint::Kind::exactly:
      return classes <= constraint_.classes && classes + remaining >= constraint_.classes;
    case ClassConstraint::Kind::at_most: return classes <= constraint_.classes;
    case ClassConstraint::Kind::any: break;
  }
  return true;
}

bool ColoringEnumerator::complete_ok(int classes) const {
  switch (constraint_.kind) {
    case ClassConstraint::Kind::exactly: return classes == constraint_.classes;
    case ClassConstraint::Kind::at_most: return classes <= constraint_.classes;
    case ClassConstraint::Kind::any: break;
  }
  return true;
}

void ColoringEnumerator::prefixes(std::uint64_t mask, int length, std::vector<WorkUnit>& out) const {
  const int total = std::popcount(mask);
  length = std::min(length, total);
  std::vector<std::uint8_t> rgs;
  auto rec = [&](auto&& self, int classes) -> void {
    const int pos = static_cast<int>(rgs.size());
    if (pos == length) {
      if (length == total && !complete_ok(classes)) return;
      out.push_back({mask, rgs});
      return;
    }
    for (int c = 0; c <= classes; ++c) {
      const int next = std::max(classes, c + 1);
      if (!admissible(next, total - pos - 1)) continue;
      rgs.push_back(static_cast<std::uint8_t>(c));
      self(self, next);
      rgs.pop_back();
    }
  };
  rec(rec, 0);
}

std::vector<WorkUnit> ColoringEnumerator::work_units(int prefix_length) const {
  std::vector<WorkUnit> units;
  const int slots = static_cast<int>(pairs_.size());
  const std::uint64_t full = slots == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << slots) - 1;
  if (!all_subsets_) {
    prefixes(full, prefix_length, units);
    return units;
  }
  for (std::uint64_t mask = 0; mask <= full; ++mask) prefixes(mask, 0, units);
  return units;
}

}  // namespace rainbow
