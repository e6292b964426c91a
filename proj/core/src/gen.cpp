#include "forkred/gen.hpp"

#include <algorithm>
#include <numeric>

namespace forkred {

QuiverMatrix random_abundant_acyclic(int n, int wlo, int whi, Rng& rng) {
  if (n < 1) throw QuiverError("need at least one vertex");
  if (wlo < 2) throw QuiverError("abundant quivers need weights >= 2");
  if (wlo > whi) throw QuiverError("invalid weight range");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  for (int i = n - 1; i > 0; --i)
    std::swap(order[i], order[rng.uniform(0, i)]);
  QuiverMatrix q(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      q.set_arrows(order[a], order[b], rng.uniform(wlo, whi));
  return q;
}

QuiverMatrix random_rank3_cyclic(int wlo, int whi, Rng& rng) {
  if (wlo < 1) throw QuiverError("cycle weights must be positive");
  if (wlo > whi) throw QuiverError("invalid weight range");
  QuiverMatrix q(3);
  q.set_arrows(1, 2, rng.uniform(wlo, whi));
  q.set_arrows(2, 3, rng.uniform(wlo, whi));
  q.set_arrows(3, 1, rng.uniform(wlo, whi));
  return q;
}

QuiverMatrix random_skew(int n, int max_abs, Rng& rng) {
  if (n < 0 || max_abs < 0) throw QuiverError("invalid range");
  QuiverMatrix q(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      q.set_arrows(i, j, rng.uniform(-max_abs, max_abs));
  return q;
}

ForkSample random_fork(int n, int wlo, int whi, int walk, Rng& rng) {
  if (n < 3) throw QuiverError("forks need at least three vertices");
  ForkSample sample;
  sample.base = random_abundant_acyclic(n, wlo, whi, rng);
  const auto order = acyclic_ordering(sample.base);
  const int middle = order[rng.uniform(1, n - 2)];
  sample.path.push_back(middle);
  sample.fork = mutate(sample.base, middle);

  int ret = middle;
  for (int step = 0; step < walk; ++step) {
    int k = rng.uniform(1, n);
    while (k == ret) k = rng.uniform(1, n);
    sample.fork = mutate(sample.fork, k);
    sample.path.push_back(k);
    ret = k;
  }
  return sample;
}

}  // namespace forkred
