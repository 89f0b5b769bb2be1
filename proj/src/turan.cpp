#include "rainbow/turan.hpp"

#include <string>

#include "rainbow/errors.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

namespace {

void check_parts(int n, int k) {
  if (k < 1 || k > n)
    throw PreconditionError("Turan parameters require 1 <= k <= n (got n = " + std::to_string(n) +
                            ", k = " + std::to_string(k) + ")");
}

}  // namespace

TuranPartition turan_partition(int n, int k) {
  check_parts(n, k);
  TuranPartition part{n, k, {}};
  const int p = n / k, i = n % k;
  part.sizes.assign(static_cast<std::size_t>(k), p);
  for (int j = 0; j < i; ++j) part.sizes[static_cast<std::size_t>(j)] = p + 1;
  return part;
}

std::int64_t turan_number(int n, int k) {
  check_parts(n, k);
  const std::int64_t p = n / k, i = n % k;
  return choose2(k) * p * p + i * (k - 1) * p + choose2(i);
}

std::int64_t turan_number_alt(int n, int k) {
  check_parts(n, k);
  const std::int64_t i = n % k;
  const std::int64_t numer = (k - 1) * (std::int64_t{n} * n - i * i);
  if (numer % (2 * k) != 0) throw std::logic_error("Turan closed form is not integral");
  return numer / (2 * k) + choose2(i);
}

std::int64_t turan_diff(int n, int k) {
  check_parts(n, k);
  return n - n / k;
}

}  // namespace rainbow
