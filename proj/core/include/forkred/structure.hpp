#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "forkred/quiver.hpp"

namespace forkred {

struct ForkWitness {
  int i;  // in-neighbor of the point of return
  int j;  // out-neighbor of the point of return
  Int f_ji;
  Int f_ir;
  Int f_rj;
};

/// Certificate that a quiver is a fork: point of return r, the unique
/// acyclic ordering of the quiver minus r, and for every in/out neighbor
/// pair the verified inequalities f_ji > f_ir and f_ji > f_rj.
struct ForkCertificate {
  int r = 0;
  std::vector<int> ordering;
  std::vector<ForkWitness> witnesses;
  // Larger indices that also satisfy the fork conditions, if any. The
  // canonical point of return is the smallest qualifying index.
  std::vector<int> other_returns;
};

enum class StructureKind { AbundantAcyclic, Fork, AcyclicNonAbundant, Other };

struct StructureClass {
  StructureKind kind = StructureKind::Other;
  std::vector<int> ordering;             // acyclic kinds only
  std::optional<ForkCertificate> fork;   // Fork only
  std::optional<bool> rank3_mutation_cyclic;  // set for cyclic rank-3 inputs
};

const char* to_string(StructureKind k);

/// True iff the signed-arrow digraph has no directed cycle.
bool is_acyclic(const QuiverMatrix& q);

/// Topological ordering with every arrow pointing forward. Ties broken by
/// smallest index; for abundant inputs the ordering is unique anyway.
/// Throws CyclicInputError on cyclic input.
std::vector<int> acyclic_ordering(const QuiverMatrix& q);

/// At least two arrows between every pair of vertices.
bool is_abundant(const QuiverMatrix& q);

/// Fork detection. Tries every candidate point of return; returns the
/// certificate for the smallest qualifying vertex, or nullopt.
std::optional<ForkCertificate> detect_fork(const QuiverMatrix& q);

/// Vertices with only outgoing / only incoming arrows. An isolated vertex
/// satisfies both conditions vacuously and is reported in both sets.
std::pair<std::vector<int>, std::vector<int>> sources_and_sinks(
    const QuiverMatrix& q);

/// Undirected connectivity classes, each sorted, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const QuiverMatrix& q);

StructureClass classify(const QuiverMatrix& q);

/// Greedy total-weight descent for rank-3 quivers: a weight-minimal quiver
/// that is still cyclic cannot be mutated to an acyclic one (classical fact,
/// not proven here); a descent path reaching an acyclic quiver decides the
/// other direction constructively. Acyclic inputs return false immediately.
bool is_mutation_cyclic_rank3(const QuiverMatrix& q);

/// Descent path taken by is_mutation_cyclic_rank3 (empty when the input is
/// already at a local minimum or acyclic).
MutationSequence rank3_descent_path(const QuiverMatrix& q);

struct FindForkOutcome {
  bool found = false;
  MutationSequence seq;
  std::optional<ForkCertificate> cert;
  long long steps_used = 0;
};

/// Search for a mutation sequence leading to a fork. Forks and abundant
/// acyclic quivers reach one in a single guaranteed step; anything else is
/// handled by greedy weight-increase with seeded random restarts. Returns
/// found=false when the budget is exhausted (mutation-finite input or
/// budget too small).
FindForkOutcome find_fork(const QuiverMatrix& q, long long budget,
                          unsigned long long seed = 0);

}  // namespace forkred
