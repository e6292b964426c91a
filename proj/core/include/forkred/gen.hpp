#pragma once

#include <random>
#include <utility>

#include "forkred/quiver.hpp"
#include "forkred/structure.hpp"

namespace forkred {

/// Deterministic seeded source. Bounded draws use modulo reduction so the
/// output stream depends only on the seed, not on the standard library's
/// distribution implementation.
class Rng {
 public:
  explicit Rng(unsigned long long seed) : engine_(seed) {}

  int uniform(int lo, int hi) {
    if (lo > hi) throw QuiverError("empty range");
    const unsigned long long span =
        static_cast<unsigned long long>(hi) - lo + 1;
    return lo + static_cast<int>(engine_() % span);
  }

  bool coin() { return (engine_() & 1) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Random abundant acyclic quiver: a random vertex ordering with forward
/// arrow weights drawn from [wlo, whi], wlo >= 2.
QuiverMatrix random_abundant_acyclic(int n, int wlo, int whi, Rng& rng);

/// Random directed 3-cycle with weights in [wlo, whi], wlo >= 1.
QuiverMatrix random_rank3_cyclic(int wlo, int whi, Rng& rng);

/// Random skew-symmetric quiver with entries in [-max_abs, max_abs].
QuiverMatrix random_skew(int n, int max_abs, Rng& rng);

struct ForkSample {
  QuiverMatrix base;      // abundant acyclic start
  MutationSequence path;  // fork-producing mutation sequence from base
  QuiverMatrix fork;      // mutate_seq(base, path)
};

/// Builds a fork by mutating a random abundant acyclic quiver at a
/// non-boundary vertex, then taking `walk` further fork-preserving steps
/// (never at the current point of return).
ForkSample random_fork(int n, int wlo, int whi, int walk, Rng& rng);

}  // namespace forkred
