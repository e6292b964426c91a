#pragma once

#include <string>
#include <utility>
#include <vector>

#include "forkred/quiver.hpp"
#include "forkred/structure.hpp"

namespace forkred {

struct ReddeningResult {
  MutationSequence sequence;
  ExtendedQuiver final_quiver;
  int red_count = 0;
  std::vector<int> green_vertices;
  int length_bound = 0;
};

/// Drives a strictly sign-coherent fork (every vertex red or green) to a
/// fork with a green point of return, at most one other green vertex and at
/// least n-2 red vertices, in at most n+2 mutations. Dispatches on the
/// colors of the point of return and of the sink of its complement; the
/// terminal case runs the full source cycle of the complement.
std::pair<MutationSequence, ExtendedQuiver> to_green_point_of_return(
    const ExtendedQuiver& f);

/// Given a fork with green return r whose only other possible green vertex
/// is the j-th vertex of the complement ordering, appends at most j+2
/// mutations ending in a fork with at least n-1 red vertices.
MutationSequence finish_from_green_return(const ExtendedQuiver& f, int j);

/// Composition of the two stages: at most 2n+3 mutations ending in a fork
/// with at least n-1 red vertices.
ReddeningResult general_reddening_fork(const ExtendedQuiver& f);

/// For an abundant acyclic mutable part whose sink is red, the full source
/// cycle leaves n-1 red vertices and one green (the old sink).
ReddeningResult source_cycle_reddening(const ExtendedQuiver& q);

enum class ReddeningStatus { Yes, No, Unknown };

const char* to_string(ReddeningStatus s);

struct ComponentReport {
  std::vector<int> vertices;  // global labels, ascending
  ReddeningStatus status = ReddeningStatus::Unknown;
  // Witness sequence in component-local labels: vertex i refers to
  // vertices[i-1] of the full quiver. Replaying it on the framed component
  // yields an all-red quiver.
  MutationSequence witness;
  std::string reason;
  int depth_searched = 0;
};

/// Unrestricted red size report. When every component is decided the value
/// n - #No is exact; otherwise only the lower bound n - #No - #Unknown is
/// certified (every connected component reaches at least n_i - 1 red).
struct URedReport {
  int n = 0;
  std::vector<ComponentReport> components;
  bool exact = false;
  int ured_value = 0;
  int lower_bound = 0;
};

/// Per-component reddening decision: acyclic components are certified Yes
/// via the acyclic-ordering maximal green sequence (classical fact, engine
/// checked in tests); mutation-cyclic rank-3 components are certified No;
/// everything else gets a bounded breadth-first search for an all-red state.
URedReport compute_ured(const QuiverMatrix& q, int depth = 12);

}  // namespace forkred
