#pragma once

#include <functional>
#include <string>
#include <vector>

#include "forkred/quiver.hpp"

namespace forkred {

/// Exact dedup key: decimal serialization of [B|C]. Labelled states only,
/// no isomorphism reduction.
std::string state_key(const ExtendedQuiver& q);

struct ExploreNode {
  const ExtendedQuiver& q;
  int depth;
  const MutationSequence& seq;
  int last;  // 0 at the root
};

/// Return false to stop the exploration early.
using NodeVisitor = std::function<bool(const ExploreNode&)>;

struct ExploreOptions {
  int depth = 6;
  // Key nodes by (state, last mutation) instead of state alone. Needed when
  // per-node checks depend on which vertex was mutated last.
  bool dedup_on_last = false;
  std::string snapshot_out;
  std::string resume_in;
};

struct ExploreStats {
  long long nodes = 0;
  long long edges = 0;
  int depth_limit = 0;
  int depth_reached = 0;
  bool exhausted = false;  // class fully enumerated strictly below the limit
  bool stopped_early = false;
  std::vector<long long> per_depth;

  // Color statistics, tracked when the root has frozen vertices.
  int max_red = -1;
  MutationSequence max_red_seq;
  bool all_red_found = false;
  MutationSequence all_red_seq;
  bool zero_row_found = false;
  bool mixed_found = false;
  MutationSequence mixed_seq;
  int mixed_vertex = 0;
};

/// Breadth-first enumeration of the labelled mutation class of the root up
/// to the given depth. Deterministic: nodes are processed in insertion
/// order and neighbors tried in ascending vertex order.
ExploreStats explore_class(const ExtendedQuiver& root,
                           const ExploreOptions& opts,
                           const NodeVisitor& visit = {});

}  // namespace forkred
