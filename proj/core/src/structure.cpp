#include "forkred/structure.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace forkred {

const char* to_string(StructureKind k) {
  switch (k) {
    case StructureKind::AbundantAcyclic: return "abundant-acyclic";
    case StructureKind::Fork: return "fork";
    case StructureKind::AcyclicNonAbundant: return "acyclic";
    case StructureKind::Other: return "other";
  }
  return "?";
}

bool is_acyclic(const QuiverMatrix& q) {
  // Kahn peel: if every vertex can be removed as a source, no cycle exists.
  std::vector<int> indeg(q.n, 0);
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j)
      if (sign_of(q.b.at(i, j)) > 0) ++indeg[j];
  std::vector<int> stack;
  for (int v = 0; v < q.n; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int removed = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++removed;
    for (int j = 0; j < q.n; ++j)
      if (sign_of(q.b.at(v, j)) > 0 && --indeg[j] == 0) stack.push_back(j);
  }
  return removed == q.n;
}

std::vector<int> acyclic_ordering(const QuiverMatrix& q) {
  std::vector<int> indeg(q.n, 0);
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j)
      if (sign_of(q.b.at(i, j)) > 0) ++indeg[j];
  std::vector<int> order;
  order.reserve(q.n);
  std::vector<bool> used(q.n, false);
  for (int step = 0; step < q.n; ++step) {
    int pick = -1;
    for (int v = 0; v < q.n; ++v) {
      if (!used[v] && indeg[v] == 0) {
        pick = v;
        break;
      }
    }
    if (pick < 0) throw CyclicInputError("quiver has a directed cycle");
    used[pick] = true;
    order.push_back(pick + 1);
    for (int j = 0; j < q.n; ++j)
      if (sign_of(q.b.at(pick, j)) > 0) --indeg[j];
  }
  return order;
}

bool is_abundant(const QuiverMatrix& q) {
  for (int i = 0; i < q.n; ++i)
    for (int j = i + 1; j < q.n; ++j)
      if (abs(q.b.at(i, j)) < 2) return false;
  return true;
}

namespace {

// Checks the fork conditions for a fixed candidate point of return on an
// abundant, non-acyclic quiver. Fills witnesses on success.
bool check_return_vertex(const QuiverMatrix& q, int r,
                         std::vector<ForkWitness>* witnesses) {
  std::vector<int> in, out;
  for (int v = 1; v <= q.n; ++v) {
    if (v == r) continue;
    const int s = sign_of(q.arrows(v, r));
    if (s > 0) in.push_back(v);
    else if (s < 0) out.push_back(v);
    // s == 0 cannot happen on abundant input.
  }
  std::vector<ForkWitness> found;
  for (int i : in) {
    for (int j : out) {
      ForkWitness w;
      w.i = i;
      w.j = j;
      w.f_ji = q.arrows(j, i);
      w.f_ir = q.arrows(i, r);
      w.f_rj = q.arrows(r, j);
      if (!(w.f_ji > w.f_ir && w.f_ji > w.f_rj)) return false;
      found.push_back(std::move(w));
    }
  }
  std::vector<int> rest;
  for (int v = 1; v <= q.n; ++v)
    if (v != r) rest.push_back(v);
  if (!is_acyclic(full_subquiver(q, rest))) return false;
  if (witnesses) *witnesses = std::move(found);
  return true;
}

}  // namespace

std::optional<ForkCertificate> detect_fork(const QuiverMatrix& q) {
  if (q.n < 3) return std::nullopt;
  if (!is_abundant(q) || is_acyclic(q)) return std::nullopt;
  ForkCertificate cert;
  for (int r = 1; r <= q.n; ++r) {
    std::vector<ForkWitness> witnesses;
    if (!check_return_vertex(q, r, &witnesses)) continue;
    if (cert.r == 0) {
      cert.r = r;
      cert.witnesses = std::move(witnesses);
    } else {
      cert.other_returns.push_back(r);
    }
  }
  if (cert.r == 0) return std::nullopt;
  std::vector<int> rest;
  for (int v = 1; v <= q.n; ++v)
    if (v != cert.r) rest.push_back(v);
  std::vector<int> local = acyclic_ordering(full_subquiver(q, rest));
  for (int pos : local) cert.ordering.push_back(rest[pos - 1]);
  return cert;
}

std::pair<std::vector<int>, std::vector<int>> sources_and_sinks(
    const QuiverMatrix& q) {
  std::vector<int> sources, sinks;
  for (int v = 1; v <= q.n; ++v) {
    bool has_in = false, has_out = false;
    for (int u = 1; u <= q.n; ++u) {
      const int s = sign_of(q.arrows(u, v));
      if (s > 0) has_in = true;
      if (s < 0) has_out = true;
    }
    if (!has_in) sources.push_back(v);
    if (!has_out) sinks.push_back(v);
  }
  return {sources, sinks};
}

std::vector<std::vector<int>> connected_components(const QuiverMatrix& q) {
  std::vector<int> comp(q.n, -1);
  int count = 0;
  for (int s = 0; s < q.n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < q.n; ++u) {
        if (comp[u] < 0 && q.b.at(v, u) != 0) {
          comp[u] = count;
          stack.push_back(u);
        }
      }
    }
    ++count;
  }
  std::vector<std::vector<int>> out(count);
  for (int v = 0; v < q.n; ++v) out[comp[v]].push_back(v + 1);
  return out;
}

StructureClass classify(const QuiverMatrix& q) {
  StructureClass out;
  if (auto cert = detect_fork(q)) {
    out.kind = StructureKind::Fork;
    out.fork = std::move(cert);
    return out;
  }
  if (is_acyclic(q)) {
    out.kind = is_abundant(q) ? StructureKind::AbundantAcyclic
                              : StructureKind::AcyclicNonAbundant;
    out.ordering = acyclic_ordering(q);
    return out;
  }
  out.kind = StructureKind::Other;
  if (q.n == 3) out.rank3_mutation_cyclic = is_mutation_cyclic_rank3(q);
  return out;
}

namespace {

// One strict-descent step, if any mutation lowers the total weight.
std::optional<int> descent_step(const QuiverMatrix& q, int avoid) {
  const Int cur = total_arrow_weight(q);
  std::optional<int> best;
  Int best_weight = cur;
  for (int k = 1; k <= q.n; ++k) {
    if (k == avoid) continue;
    Int w = total_arrow_weight(mutate(q, k));
    if (w < best_weight) {
      best_weight = w;
      best = k;
    }
  }
  return best;
}

}  // namespace

MutationSequence rank3_descent_path(const QuiverMatrix& q) {
  if (q.n != 3) throw QuiverError("descent criterion requires 3 vertices");
  MutationSequence path;
  QuiverMatrix cur = q;
  int last = 0;
  while (!is_acyclic(cur)) {
    auto k = descent_step(cur, last);
    if (!k) break;  // local minimum
    cur = mutate(cur, *k);
    path.push_back(*k);
    last = *k;
  }
  return path;
}

bool is_mutation_cyclic_rank3(const QuiverMatrix& q) {
  if (q.n != 3) throw QuiverError("descent criterion requires 3 vertices");
  if (is_acyclic(q)) return false;
  QuiverMatrix cur = mutate_seq(q, rank3_descent_path(q));
  return !is_acyclic(cur);
}

FindForkOutcome find_fork(const QuiverMatrix& q, long long budget,
                          unsigned long long seed) {
  FindForkOutcome out;
  if (connected_components(q).size() > 1)
    throw QuiverError("fork search requires a connected quiver");

  std::mt19937_64 rng(seed);
  long long steps = 0;
  const int max_stall = 2 * q.n + 4;

  for (int restart = 0; steps < budget; ++restart) {
    QuiverMatrix cur = q;
    MutationSequence seq;
    int last = 0;
    int stall = 0;
    const bool randomized = restart > 0;

    while (steps < budget) {
      if (auto cert = detect_fork(cur)) {
        out.found = true;
        out.seq = std::move(seq);
        out.cert = std::move(cert);
        out.steps_used = steps;
        return out;
      }
      int pick = 0;
      std::vector<int> eligible;
      if (is_abundant(cur) && is_acyclic(cur) && cur.n >= 3) {
        // Any vertex that is neither the source nor the sink turns an
        // abundant acyclic quiver into a fork in one mutation.
        auto order = acyclic_ordering(cur);
        eligible.assign(order.begin() + 1, order.end() - 1);
        std::erase(eligible, last);
        if (eligible.empty())
          eligible.push_back(order.front() != last ? order.front()
                                                   : order.back());
        std::sort(eligible.begin(), eligible.end());
        pick = randomized ? eligible[rng() % eligible.size()] : eligible[0];
      } else {
        Int best_weight{-1};
        std::vector<int> best;
        for (int k = 1; k <= cur.n; ++k) {
          if (k == last) continue;
          Int w = total_arrow_weight(mutate(cur, k));
          if (w > best_weight) {
            best_weight = w;
            best = {k};
          } else if (w == best_weight) {
            best.push_back(k);
          }
        }
        if (best.empty()) break;
        pick = randomized ? best[rng() % best.size()] : best[0];
        if (best_weight <= total_arrow_weight(cur)) {
          if (++stall > max_stall) break;  // no growth; restart
        } else {
          stall = 0;
        }
      }
      cur = mutate(cur, pick);
      seq.push_back(pick);
      last = pick;
      ++steps;
    }
  }
  out.steps_used = steps;
  return out;
}

}  // namespace forkred
