#include "abc/counting.hpp"

#include <stdexcept>

namespace abc {

std::vector<std::uint64_t> rooted_tree_counts(int n) {
  if (n < 0 || n > 26)
    throw std::domain_error("rooted tree counts supported for 0 <= n <= 26");
  std::vector<std::uint64_t> r(n + 1, 0);
  if (n >= 1) r[1] = 1;
  // r(m+1) = (1/m) * sum_{k=1..m} ( sum_{d | k} d*r(d) ) * r(m-k+1)
  std::vector<std::uint64_t> s(n + 1, 0);  // s[k] = sum_{d|k} d*r(d)
  for (int m = 1; m + 1 <= n; ++m) {
    // update s[k] contributions of d = m (r[m] is final by now)
    std::uint64_t acc = 0;
    for (int k = 1; k <= m; ++k) {
      if (s[k] == 0) {
        for (int d = 1; d <= k; ++d)
          if (k % d == 0) s[k] += static_cast<std::uint64_t>(d) * r[d];
      }
      acc += s[k] * r[m - k + 1];
    }
    r[m + 1] = acc / m;
    if (acc % m != 0)
      throw std::logic_error("rooted tree recurrence must divide evenly");
  }
  return r;
}

std::uint64_t free_tree_count(int n) {
  if (n <= 0) return 0;
  if (n == 1) return 1;
  auto r = rooted_tree_counts(n);
  // t(n) = r(n) - (1/2) * ( sum_{i+j=n, i,j>=1} r(i)r(j) - [n even] r(n/2) )
  std::uint64_t pairs = 0;
  for (int i = 1; i < n; ++i) pairs += r[i] * r[n - i];
  std::uint64_t diag = (n % 2 == 0) ? r[n / 2] : 0;
  return r[n] - (pairs - diag) / 2;
}

}  // namespace abc
