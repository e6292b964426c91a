#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "forkred/quiver.hpp"
#include "forkred/structure.hpp"

namespace forkred {

/// Predicted unique acyclic ordering of a full subquiver of a mutated
/// quiver. removed == 0 means the prediction covers the whole quiver.
struct OrderingPrediction {
  int removed = 0;
  std::vector<int> ordering;
};

/// Per-vertex color constraints after a mutation pattern. Vertices the
/// underlying statement does not control are left unconstrained rather
/// than guessed.
struct ColorPrediction {
  std::vector<std::optional<VertexColor>> constrained;  // index v-1

  std::optional<VertexColor> at(int v) const { return constrained[v - 1]; }
};

/// Ordering of mu_{[v_1..v_j]}(Q) for an abundant acyclic quiver with unique
/// ordering v_1 < ... < v_n: the ordering cycles, v_{j+1} < ... < v_n <
/// v_1 < ... < v_j.
OrderingPrediction predict_order_source_cycle(const std::vector<int>& ordering,
                                              int j);

/// Ordering of mu_{v_j}(F) minus v_j for a fork F: the point of return moves
/// to the front when r -> v_j in F, to the back when v_j -> r.
OrderingPrediction predict_order_fork_single(const QuiverMatrix& q,
                                             const ForkCertificate& cert,
                                             int j);

/// Orderings of mu_{[v_1..v_j]}(F) minus v_j and minus r.
std::pair<OrderingPrediction, OrderingPrediction> predict_order_fork_source_seq(
    const ForkCertificate& cert, int j);

/// Orderings of mu_{[v_1..v_j, r]}(F) minus v_j and minus r.
std::pair<OrderingPrediction, OrderingPrediction>
predict_order_after_return_mutation(const ForkCertificate& cert, int j);

/// Color constraints after a single mutation at v, for an ice quiver whose
/// mutable part is abundant acyclic or a fork (v must not be the point of
/// return). Requires the colors of q to be well defined.
ColorPrediction predict_colors_single(const ExtendedQuiver& q, int v);

/// Color constraints after the source prefix [v_1..v_j] of an abundant
/// acyclic mutable part whose v_j is red: v_1..v_{j-1} end red, v_j green.
ColorPrediction predict_colors_source_seq(const ExtendedQuiver& q, int j);

/// Color of a fork's point of return after any source prefix of the
/// complement: green stays green; blue stays blue until a green vertex is
/// mutated, then turns green; red is uncontrolled. The blue case cannot
/// trigger when the input class is strictly sign-coherent.
std::optional<VertexColor> predict_return_color_after_source_prefix(
    VertexColor return_color, bool green_vertex_mutated);

/// Full-cycle prediction for a fork whose complement sink is red: after
/// [v_1..v_{n-1}], every complement vertex except v_{n-1} is red, v_{n-1} is
/// green, and a green point of return stays green.
ColorPrediction predict_colors_fork_sink_cycle(const ExtendedQuiver& q,
                                               const ForkCertificate& cert);

}  // namespace forkred
