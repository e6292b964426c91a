#include "forkred/dynamics.hpp"

#include <algorithm>

namespace forkred {

namespace {

int position_in(const std::vector<int>& ordering, int v) {
  auto it = std::find(ordering.begin(), ordering.end(), v);
  if (it == ordering.end())
    throw QuiverError("vertex " + std::to_string(v) + " not in ordering");
  return static_cast<int>(it - ordering.begin()) + 1;
}

}  // namespace

OrderingPrediction predict_order_source_cycle(const std::vector<int>& ordering,
                                              int j) {
  const int n = static_cast<int>(ordering.size());
  if (j < 1 || j > n) throw std::out_of_range("prefix length out of range");
  OrderingPrediction out;
  out.ordering.reserve(n);
  for (int i = j; i < n; ++i) out.ordering.push_back(ordering[i]);
  for (int i = 0; i < j; ++i) out.ordering.push_back(ordering[i]);
  return out;
}

OrderingPrediction predict_order_fork_single(const QuiverMatrix& q,
                                             const ForkCertificate& cert,
                                             int j) {
  const int n1 = static_cast<int>(cert.ordering.size());
  if (j < 1 || j > n1) throw std::out_of_range("ordering index out of range");
  const int vj = cert.ordering[j - 1];
  if (vj == cert.r) throw QuiverError("cannot predict mutation at the return");
  OrderingPrediction out;
  out.removed = vj;
  const bool return_points_at_vj = sign_of(q.arrows(cert.r, vj)) > 0;
  if (return_points_at_vj) out.ordering.push_back(cert.r);
  for (int i = 0; i < n1; ++i)
    if (i != j - 1) out.ordering.push_back(cert.ordering[i]);
  if (!return_points_at_vj) out.ordering.push_back(cert.r);
  return out;
}

std::pair<OrderingPrediction, OrderingPrediction> predict_order_fork_source_seq(
    const ForkCertificate& cert, int j) {
  const int n1 = static_cast<int>(cert.ordering.size());
  if (j < 1 || j > n1) throw std::out_of_range("prefix length out of range");

  OrderingPrediction minus_vj;
  minus_vj.removed = cert.ordering[j - 1];
  minus_vj.ordering.push_back(cert.r);
  for (int i = j; i < n1; ++i) minus_vj.ordering.push_back(cert.ordering[i]);
  for (int i = 0; i < j - 1; ++i) minus_vj.ordering.push_back(cert.ordering[i]);

  OrderingPrediction minus_r;
  minus_r.removed = cert.r;
  for (int i = j; i < n1; ++i) minus_r.ordering.push_back(cert.ordering[i]);
  for (int i = 0; i < j; ++i) minus_r.ordering.push_back(cert.ordering[i]);

  return {minus_vj, minus_r};
}

std::pair<OrderingPrediction, OrderingPrediction>
predict_order_after_return_mutation(const ForkCertificate& cert, int j) {
  const int n1 = static_cast<int>(cert.ordering.size());
  if (j < 1 || j > n1) throw std::out_of_range("prefix length out of range");

  OrderingPrediction minus_vj;
  minus_vj.removed = cert.ordering[j - 1];
  for (int i = j; i < n1; ++i) minus_vj.ordering.push_back(cert.ordering[i]);
  for (int i = 0; i < j - 1; ++i) minus_vj.ordering.push_back(cert.ordering[i]);
  minus_vj.ordering.push_back(cert.r);

  OrderingPrediction minus_r;
  minus_r.removed = cert.r;
  minus_r.ordering.push_back(cert.ordering[j - 1]);
  for (int i = j; i < n1; ++i) minus_r.ordering.push_back(cert.ordering[i]);
  for (int i = 0; i < j - 1; ++i) minus_r.ordering.push_back(cert.ordering[i]);

  return {minus_vj, minus_r};
}

ColorPrediction predict_colors_single(const ExtendedQuiver& q, int v) {
  const QuiverMatrix part = mutable_part(q);
  const auto colors = vertex_colors(q);
  ColorPrediction out;
  out.constrained.assign(q.n, std::nullopt);

  std::vector<int> ordering;
  std::optional<ForkCertificate> cert = detect_fork(part);
  if (cert) {
    if (v == cert->r)
      throw QuiverError("cannot predict mutation at the return");
    ordering = cert->ordering;
  } else if (is_abundant(part) && is_acyclic(part)) {
    ordering = acyclic_ordering(part);
  } else {
    throw QuiverError("mutable part must be abundant acyclic or a fork");
  }

  const int pos = position_in(ordering, v);
  const int n1 = static_cast<int>(ordering.size());
  switch (colors[v - 1]) {
    case VertexColor::Blue:
      for (int u = 1; u <= q.n; ++u) out.constrained[u - 1] = colors[u - 1];
      break;
    case VertexColor::Green:
      for (int i = pos; i < n1; ++i)
        out.constrained[ordering[i] - 1] = colors[ordering[i] - 1];
      out.constrained[v - 1] = VertexColor::Red;
      if (cert && sign_of(q.b.at(v - 1, cert->r - 1)) > 0)
        out.constrained[cert->r - 1] = colors[cert->r - 1];
      break;
    case VertexColor::Red:
      for (int i = 0; i + 1 < pos; ++i)
        out.constrained[ordering[i] - 1] = colors[ordering[i] - 1];
      out.constrained[v - 1] = VertexColor::Green;
      if (cert && sign_of(q.b.at(cert->r - 1, v - 1)) > 0)
        out.constrained[cert->r - 1] = colors[cert->r - 1];
      break;
  }
  return out;
}

ColorPrediction predict_colors_source_seq(const ExtendedQuiver& q, int j) {
  const QuiverMatrix part = mutable_part(q);
  if (!is_abundant(part) || !is_acyclic(part))
    throw QuiverError("mutable part must be abundant acyclic");
  const auto ordering = acyclic_ordering(part);
  if (j < 1 || j > part.n) throw std::out_of_range("prefix length out of range");
  const int vj = ordering[j - 1];
  if (vertex_color(q, vj) != VertexColor::Red)
    throw QuiverError("vertex " + std::to_string(vj) +
                      " at prefix end must be red");
  ColorPrediction out;
  out.constrained.assign(q.n, std::nullopt);
  for (int i = 0; i + 1 < j; ++i)
    out.constrained[ordering[i] - 1] = VertexColor::Red;
  out.constrained[vj - 1] = VertexColor::Green;
  return out;
}

std::optional<VertexColor> predict_return_color_after_source_prefix(
    VertexColor return_color, bool green_vertex_mutated) {
  switch (return_color) {
    case VertexColor::Green: return VertexColor::Green;
    case VertexColor::Blue:
      return green_vertex_mutated ? VertexColor::Green : VertexColor::Blue;
    case VertexColor::Red: return std::nullopt;
  }
  return std::nullopt;
}

ColorPrediction predict_colors_fork_sink_cycle(const ExtendedQuiver& q,
                                               const ForkCertificate& cert) {
  const int n1 = static_cast<int>(cert.ordering.size());
  const int sink = cert.ordering[n1 - 1];
  if (vertex_color(q, sink) != VertexColor::Red)
    throw QuiverError("complement sink must be red");
  ColorPrediction out;
  out.constrained.assign(q.n, std::nullopt);
  for (int i = 0; i + 1 < n1; ++i)
    out.constrained[cert.ordering[i] - 1] = VertexColor::Red;
  out.constrained[sink - 1] = VertexColor::Green;
  if (vertex_color(q, cert.r) == VertexColor::Green)
    out.constrained[cert.r - 1] = VertexColor::Green;
  return out;
}

}  // namespace forkred
