#include "forkred/reddening.hpp"

#include <algorithm>

#include "forkred/explore.hpp"

namespace forkred {

namespace {

struct ForkState {
  ExtendedQuiver q;
  ForkCertificate cert;
  std::vector<VertexColor> colors;
};

ForkState make_fork_state(ExtendedQuiver q) {
  auto cert = detect_fork(mutable_part(q));
  if (!cert) throw NotAForkError("mutable part is not a fork");
  ForkState st{std::move(q), std::move(*cert), {}};
  st.colors = vertex_colors(st.q);
  for (int v = 1; v <= st.q.n; ++v)
    if (st.colors[v - 1] == VertexColor::Blue)
      throw BlueVertexError("vertex " + std::to_string(v) +
                            " is blue; strict sign-coherence required");
  return st;
}

int count_red(const std::vector<VertexColor>& colors) {
  return static_cast<int>(
      std::count(colors.begin(), colors.end(), VertexColor::Red));
}

std::vector<int> green_set(const std::vector<VertexColor>& colors) {
  std::vector<int> out;
  for (size_t i = 0; i < colors.size(); ++i)
    if (colors[i] == VertexColor::Green) out.push_back(static_cast<int>(i) + 1);
  return out;
}

}  // namespace

std::pair<MutationSequence, ExtendedQuiver> to_green_point_of_return(
    const ExtendedQuiver& f) {
  ForkState st = make_fork_state(f);
  const int n = f.n;
  MutationSequence seq;

  // At most three preliminary sink mutations reach the configuration
  // (red complement sink, green return); the full source cycle of the
  // complement then finishes. Total length 3 + (n-1) = n+2 at worst.
  for (int pre = 0;; ++pre) {
    const int sink = st.cert.ordering.back();
    const VertexColor sink_color = st.colors[sink - 1];
    const VertexColor return_color = st.colors[st.cert.r - 1];
    if (sink_color == VertexColor::Red &&
        return_color == VertexColor::Green) {
      for (int v : st.cert.ordering) {
        st.q = mutate(st.q, v);
        seq.push_back(v);
      }
      st = make_fork_state(std::move(st.q));
      break;
    }
    if (pre >= 3)
      throw QuiverError(
          "green-return dispatch did not settle in three mutations; input "
          "is outside the strictly sign-coherent regime");
    st.q = mutate(st.q, sink);
    seq.push_back(sink);
    st = make_fork_state(std::move(st.q));
  }

  const auto greens = green_set(st.colors);
  if (st.colors[st.cert.r - 1] != VertexColor::Green ||
      greens.size() > 2 || count_red(st.colors) < n - 2 ||
      static_cast<int>(seq.size()) > n + 2)
    throw QuiverError("green-return postcondition failed");
  return {std::move(seq), std::move(st.q)};
}

MutationSequence finish_from_green_return(const ExtendedQuiver& f, int j) {
  ForkState st = make_fork_state(f);
  const int n = f.n;
  const int n1 = static_cast<int>(st.cert.ordering.size());
  if (j < 1 || j > n1) throw std::out_of_range("ordering index out of range");
  if (st.colors[st.cert.r - 1] != VertexColor::Green)
    throw QuiverError("point of return must be green");
  const int vj = st.cert.ordering[j - 1];
  for (int v = 1; v <= n; ++v)
    if (st.colors[v - 1] == VertexColor::Green && v != st.cert.r && v != vj)
      throw QuiverError("green vertex " + std::to_string(v) +
                        " outside {return, v_j}");

  MutationSequence seq;
  auto finish = [&](const ExtendedQuiver& done) {
    if (count_red(vertex_colors(done)) < n - 1 ||
        static_cast<int>(seq.size()) > j + 2)
      throw QuiverError("green-return finish postcondition failed");
    return seq;
  };

  if (st.colors[vj - 1] != VertexColor::Green) return finish(st.q);

  if (j == 1) {
    seq.push_back(vj);
    return finish(mutate(st.q, vj));
  }

  // Source prefix up to v_{j-1}, then the return.
  const int vj1 = st.cert.ordering[j - 2];
  ExtendedQuiver cur = st.q;
  for (int i = 0; i + 1 < j; ++i) {
    cur = mutate(cur, st.cert.ordering[i]);
    seq.push_back(st.cert.ordering[i]);
  }
  cur = mutate(cur, st.cert.r);
  seq.push_back(st.cert.r);

  if (vertex_color(cur, vj) != VertexColor::Green) return finish(cur);

  cur = mutate(cur, vj1);
  seq.push_back(vj1);
  cur = mutate(cur, vj);
  seq.push_back(vj);
  return finish(cur);
}

ReddeningResult general_reddening_fork(const ExtendedQuiver& f) {
  auto [head, staged] = to_green_point_of_return(f);
  ForkState st = make_fork_state(staged);

  int j = 0;
  for (int pos = 1; pos <= static_cast<int>(st.cert.ordering.size()); ++pos) {
    const int v = st.cert.ordering[pos - 1];
    if (st.colors[v - 1] == VertexColor::Green) {
      j = pos;
      break;
    }
  }

  ReddeningResult res;
  res.sequence = std::move(head);
  if (j > 0) {
    MutationSequence tail = finish_from_green_return(staged, j);
    res.final_quiver = mutate_seq(staged, tail);
    res.sequence.append(tail);
  } else {
    res.final_quiver = std::move(staged);
  }
  const auto colors = vertex_colors(res.final_quiver);
  res.red_count = count_red(colors);
  res.green_vertices = green_set(colors);
  res.length_bound = 2 * f.n + 3;
  if (res.red_count < f.n - 1 ||
      static_cast<int>(res.sequence.size()) > res.length_bound)
    throw QuiverError("general reddening postcondition failed");
  return res;
}

ReddeningResult source_cycle_reddening(const ExtendedQuiver& q) {
  const QuiverMatrix part = mutable_part(q);
  if (!is_acyclic(part))
    throw CyclicInputError("mutable part must be acyclic");
  if (!is_abundant(part))
    throw QuiverError("mutable part must be abundant");
  const auto ordering = acyclic_ordering(part);
  if (q.n == 0) throw QuiverError("empty quiver");
  const int sink = ordering.back();
  if (vertex_color(q, sink) != VertexColor::Red)
    throw SinkNotRedError("sink " + std::to_string(sink) + " is not red");

  ReddeningResult res;
  res.sequence = MutationSequence(ordering);
  res.final_quiver = mutate_seq(q, res.sequence);
  const auto colors = vertex_colors(res.final_quiver);
  res.red_count = count_red(colors);
  res.green_vertices = green_set(colors);
  res.length_bound = q.n;
  if (res.red_count != q.n - 1 ||
      vertex_color(res.final_quiver, sink) != VertexColor::Green)
    throw QuiverError("source cycle postcondition failed");
  return res;
}

const char* to_string(ReddeningStatus s) {
  switch (s) {
    case ReddeningStatus::Yes: return "yes";
    case ReddeningStatus::No: return "no";
    case ReddeningStatus::Unknown: return "unknown";
  }
  return "?";
}

URedReport compute_ured(const QuiverMatrix& q, int depth) {
  URedReport report;
  report.n = q.n;
  int no = 0, unknown = 0;
  for (const auto& comp : connected_components(q)) {
    ComponentReport cr;
    cr.vertices = comp;
    QuiverMatrix sub = full_subquiver(q, comp);
    if (is_acyclic(sub)) {
      cr.status = ReddeningStatus::Yes;
      cr.witness = MutationSequence(acyclic_ordering(sub));
      cr.reason = "acyclic: the acyclic-ordering sequence is a maximal "
                  "green sequence";
    } else if (sub.n == 3 && is_mutation_cyclic_rank3(sub)) {
      cr.status = ReddeningStatus::No;
      cr.reason = "mutation-cyclic on three vertices: no state with all "
                  "vertices red is reachable";
    } else {
      ExploreOptions opts;
      opts.depth = depth;
      cr.depth_searched = depth;
      auto stats = explore_class(frame(sub), opts, [n = sub.n](
                                                       const ExploreNode& node) {
        for (int v = 1; v <= n; ++v)
          if (c_row_sign(node.q, v) != RowSign::Negative) return true;
        return false;  // all red: stop
      });
      if (stats.all_red_found) {
        cr.status = ReddeningStatus::Yes;
        cr.witness = stats.all_red_seq;
        cr.reason = "all-red state found by bounded search";
      } else {
        cr.status = ReddeningStatus::Unknown;
        cr.reason = "no all-red state within depth " + std::to_string(depth);
      }
    }
    if (cr.status == ReddeningStatus::No) ++no;
    if (cr.status == ReddeningStatus::Unknown) ++unknown;
    report.components.push_back(std::move(cr));
  }
  report.exact = unknown == 0;
  report.lower_bound = report.n - no - unknown;
  report.ured_value = report.exact ? report.n - no : report.lower_bound;
  return report;
}

}  // namespace forkred
