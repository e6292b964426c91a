#include "forkred/verify.hpp"

#include <algorithm>

namespace forkred {

namespace {

int strict_sign(const ExtendedQuiver& q, int v) {
  switch (c_row_sign(q, v)) {
    case RowSign::Positive: return 1;
    case RowSign::Negative: return -1;
    default: return 0;  // sign undefined on zero or mixed rows
  }
}

}  // namespace

bool b_times_c_nonneg(const ExtendedQuiver& q, int i, int j) {
  const int bs = sign_of(q.b.at(i - 1, j - 1));
  for (int e = 0; e < q.m; ++e)
    if (bs * sign_of(q.c.at(j - 1, e)) < 0) return false;
  return true;
}

bool b_times_c_nonpos(const ExtendedQuiver& q, int i, int j) {
  const int bs = sign_of(q.b.at(i - 1, j - 1));
  for (int e = 0; e < q.m; ++e)
    if (bs * sign_of(q.c.at(j - 1, e)) > 0) return false;
  return true;
}

bool row_abs_dominates(const ExtendedQuiver& q, int i, int k) {
  for (int e = 0; e < q.m; ++e)
    if (abs(q.c.at(i - 1, e)) < abs(q.c.at(k - 1, e))) return false;
  return true;
}

namespace {

// sgn(c_i) c_i >= sgn(c_k) c_k componentwise; both rows must carry a sign.
bool signed_row_dominates(const ExtendedQuiver& q, int i, int k, int si,
                          int sk) {
  for (int e = 0; e < q.m; ++e) {
    Int lhs = q.c.at(i - 1, e) * si;
    Int rhs = q.c.at(k - 1, e) * sk;
    if (lhs < rhs) return false;
  }
  return true;
}

}  // namespace

BaseConditionReport evaluate_sign_conditions(const ExtendedQuiver& state,
                                             int r, bool require_nonzero_b) {
  BaseConditionReport rep;
  rep.v = r;
  std::vector<int> signs(state.n + 1, 0);
  for (int v = 1; v <= state.n; ++v) {
    signs[v] = strict_sign(state, v);
    if (signs[v] == 0) {
      rep.bullets[0] = false;
      rep.witnesses.push_back(
          {1, v, 0,
           std::string("vertex ") + std::to_string(v) + " is " +
               to_string(c_row_sign(state, v))});
    }
  }

  for (int j = 1; j <= state.n; ++j) {
    if (j == r) continue;
    const bool b_zero = sign_of(state.b.at(r - 1, j - 1)) == 0;
    if (b_times_c_nonneg(state, r, j) && !(require_nonzero_b && b_zero)) {
      const bool same_sign = signs[j] != 0 && signs[j] == signs[r];
      const bool dominates = signs[j] != 0 && signs[r] != 0 &&
                             signed_row_dominates(state, j, r, signs[j],
                                                  signs[r]);
      if (!same_sign && !dominates) {
        rep.bullets[1] = false;
        rep.witnesses.push_back(
            {2, r, j,
             "b_rj c_j >= 0 but c_" + std::to_string(j) +
                 " neither matches sgn(c_" + std::to_string(r) +
                 ") nor dominates it"});
      }
    }
    if (b_times_c_nonpos(state, r, j)) {
      if (!(signs[j] != 0 && signs[j] == -signs[r])) {
        rep.bullets[2] = false;
        rep.witnesses.push_back(
            {3, r, j,
             "b_rj c_j <= 0 but sgn(c_" + std::to_string(j) +
                 ") != -sgn(c_" + std::to_string(r) + ")"});
      }
    }
  }

  for (int i = 1; i <= state.n; ++i) {
    if (i == r) continue;
    for (int j = 1; j <= state.n; ++j) {
      if (j == r || j == i) continue;
      if (!b_times_c_nonneg(state, i, j)) continue;
      if (!(signs[i] != 0 && signs[i] == signs[j])) {
        rep.bullets[3] = false;
        rep.witnesses.push_back(
            {4, i, j,
             "b_ij c_j >= 0 but sgn(c_" + std::to_string(i) +
                 ") != sgn(c_" + std::to_string(j) + ")"});
      }
    }
  }
  return rep;
}

BaseConditionReport check_base_conditions(const ExtendedQuiver& q, int v,
                                          bool require_nonzero_b) {
  return evaluate_sign_conditions(mutate(q, v), v, require_nonzero_b);
}

namespace {

void check_structural_precondition(const ExtendedQuiver& first,
                                   int v, TrajectoryMode mode) {
  const QuiverMatrix part = mutable_part(first);
  switch (mode) {
    case TrajectoryMode::Fork: {
      auto cert = detect_fork(part);
      if (!cert || cert->r != v)
        throw QuiverError("first mutation must leave a fork returned to " +
                          std::to_string(v));
      return;
    }
    case TrajectoryMode::AbundantAcyclic: {
      if (!is_abundant(part) || !is_acyclic(part))
        throw QuiverError("first mutation must leave an abundant acyclic "
                          "quiver");
      auto [sources, sinks] = sources_and_sinks(part);
      const bool boundary =
          std::find(sources.begin(), sources.end(), v) != sources.end() ||
          std::find(sinks.begin(), sinks.end(), v) != sinks.end();
      if (!boundary)
        throw QuiverError("vertex " + std::to_string(v) +
                          " must be a source or sink after mutation");
      return;
    }
    case TrajectoryMode::Rank3Cyclic: {
      if (part.n != 3 || !is_mutation_cyclic_rank3(part))
        throw NotRank3CyclicError(
            "mutable part must be mutation-cyclic on three vertices");
      return;
    }
  }
}

}  // namespace

TrajectoryReport verify_trajectory(const ExtendedQuiver& q, int v,
                                   const MutationSequence& w,
                                   TrajectoryMode mode,
                                   bool require_nonzero_b) {
  if (w.empty() || *w.begin() != v)
    throw QuiverError("sequence must begin with vertex " + std::to_string(v));
  TrajectoryReport report;
  report.mode = mode;

  ExtendedQuiver cur = mutate(q, v);
  check_structural_precondition(cur, v, mode);
  report.base = check_base_conditions(q, v, require_nonzero_b);
  if (!report.base.all_hold())
    throw QuiverError("base sign conditions fail for mutation at " +
                      std::to_string(v));

  int prefix_len = 0;
  int r = v;
  auto record = [&]() {
    TrajectoryStep step;
    step.prefix_len = prefix_len;
    step.r = r;
    for (int u = 1; u <= cur.n; ++u) step.signs.push_back(c_row_sign(cur, u));
    BaseConditionReport strict = evaluate_sign_conditions(cur, r, true);
    BaseConditionReport relaxed = evaluate_sign_conditions(cur, r, false);
    if (strict.bullets[1] != relaxed.bullets[1])
      report.readings_diverged = true;
    const BaseConditionReport& chosen = require_nonzero_b ? strict : relaxed;
    step.bullets = chosen.bullets;
    step.violations = chosen.witnesses;
    if (mode == TrajectoryMode::Fork) {
      for (int i = 1; i <= cur.n; ++i) {
        if (i == r) continue;
        if (!b_times_c_nonneg(cur, i, r)) continue;
        const int si = strict_sign(cur, i);
        const int sr = strict_sign(cur, r);
        if (!(si != 0 && sr != 0 && si == -sr &&
              signed_row_dominates(cur, i, r, si, sr))) {
          step.return_sign_ok = false;
          step.violations.push_back(
              {5, i, r,
               "b_ir c_r >= 0 but c_" + std::to_string(i) +
                   " does not oppose and dominate c_" + std::to_string(r)});
        }
      }
    }
    if (!chosen.all_hold() || !step.return_sign_ok) report.ok = false;
    report.steps.push_back(std::move(step));
  };

  prefix_len = 1;
  record();
  bool first = true;
  for (int k : w) {
    if (first) {
      first = false;
      continue;
    }
    cur = mutate(cur, k);
    r = k;
    ++prefix_len;
    record();
  }
  return report;
}

const char* to_string(CoherenceKind k) {
  switch (k) {
    case CoherenceKind::Strict: return "strict";
    case CoherenceKind::Uniform: return "uniform";
    case CoherenceKind::TriviallyCoherent: return "trivially-coherent";
    case CoherenceKind::Violated: return "violated";
  }
  return "?";
}

CoherenceVerdict bfs_sign_coherence(const ExtendedQuiver& q, int depth) {
  ExploreOptions opts;
  opts.depth = depth;
  ExploreStats stats = explore_class(q, opts);

  CoherenceVerdict verdict;
  verdict.depth = depth;
  verdict.exhausted = stats.exhausted;
  verdict.nodes = stats.nodes;
  bool all_rows_zero = true;
  for (int v = 1; v <= q.n; ++v)
    if (c_row_sign(q, v) != RowSign::Zero) all_rows_zero = false;
  if (stats.mixed_found) {
    verdict.kind = CoherenceKind::Violated;
    verdict.witness = stats.mixed_seq;
    verdict.witness_vertex = stats.mixed_vertex;
  } else if (all_rows_zero) {
    // C = 0 never changes; the whole class is blue.
    verdict.kind = CoherenceKind::TriviallyCoherent;
  } else if (stats.zero_row_found) {
    verdict.kind = CoherenceKind::Uniform;
  } else {
    verdict.kind = CoherenceKind::Strict;
  }
  return verdict;
}

NoAllRedVerdict check_no_all_red(const QuiverMatrix& q, int depth) {
  if (q.n != 3)
    throw NotRank3CyclicError("input must have exactly three vertices");
  if (!is_mutation_cyclic_rank3(q)) {
    std::string detail = is_acyclic(q)
                             ? "input is acyclic"
                             : "weight descent reaches an acyclic quiver";
    throw NotRank3CyclicError("not mutation-cyclic: " + detail);
  }

  NoAllRedVerdict verdict;
  verdict.depth = depth;
  ExploreOptions opts;
  opts.depth = depth;
  opts.dedup_on_last = true;  // sign conditions depend on the last mutation

  auto visit = [&](const ExploreNode& node) {
    if (node.last == 0) return true;
    BaseConditionReport rep =
        evaluate_sign_conditions(node.q, node.last, true);
    for (const auto& wit : rep.witnesses)
      verdict.assertion_failures.emplace_back(node.seq.entries(), wit);
    // All-red obstruction: an in-neighbor/out-neighbor pair of the last
    // mutated vertex with these products forces an oppositely signed row.
    for (int i = 1; i <= node.q.n; ++i) {
      if (i == node.last) continue;
      for (int j = 1; j <= node.q.n; ++j) {
        if (j == node.last || j == i) continue;
        if (b_times_c_nonneg(node.q, node.last, i) &&
            b_times_c_nonpos(node.q, node.last, j)) {
          const int sj = strict_sign(node.q, j);
          const int sr = strict_sign(node.q, node.last);
          if (!(sj != 0 && sj == -sr))
            verdict.assertion_failures.emplace_back(
                node.seq.entries(),
                BulletWitness{3, node.last, j,
                              "obstruction: sgn(c_j) must oppose sgn(c_r)"});
        }
      }
    }
    return true;
  };

  ExploreStats stats = explore_class(frame(q), opts, visit);
  verdict.nodes = stats.nodes;
  verdict.all_red_found = stats.all_red_found;
  verdict.witness = stats.all_red_seq;
  return verdict;
}

}  // namespace forkred
