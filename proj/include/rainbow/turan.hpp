#pragma once

#include <cstdint>
#include <vector>

namespace rainbow {

/// Balanced part sizes of T(n,k): i parts of size p+1 then k-i parts of size p,
/// where p = n / k and i = n mod k.
struct TuranPartition {
  int n = 0;
  int k = 0;
  std::vector<int> sizes;

  int p() const noexcept { return n / k; }
  int i() const noexcept { return n % k; }
  friend bool operator==(const TuranPartition&, const TuranPartition&) = default;
};

/// Throws PreconditionError unless 1 <= k <= n.
TuranPartition turan_partition(int n, int k);

/// t(n,k) = C(k,2) p^2 + i (k-1) p + C(i,2).
std::int64_t turan_number(int n, int k);
/// Second closed form: (k-1)/(2k) (n^2 - i^2) + C(i,2), evaluated exactly in integers.
std::int64_t turan_number_alt(int n, int k);
/// t(n+1,k) - t(n,k) = n - floor(n/k).
std::int64_t turan_diff(int n, int k);

}  // namespace rainbow
