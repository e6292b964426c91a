#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "forkred/explore.hpp"
#include "forkred/quiver.hpp"
#include "forkred/structure.hpp"

namespace forkred {

/// b_ij * c_j >= 0 (resp. <= 0) componentwise, for the scalar b(i,j) and
/// the c-vector of j. A zero scalar or zero row satisfies both.
bool b_times_c_nonneg(const ExtendedQuiver& q, int i, int j);
bool b_times_c_nonpos(const ExtendedQuiver& q, int i, int j);

/// Componentwise |c_i| >= |c_k|.
bool row_abs_dominates(const ExtendedQuiver& q, int i, int k);

struct BulletWitness {
  int bullet;  // 1..4, 5 for the point-of-return sign check
  int i;
  int j;
  std::string detail;
};

/// Evaluation of the four sign-control conditions at a state whose last
/// mutation was r:
///   1. every mutable vertex is red or green;
///   2. b_rj c_j >= 0  =>  sgn(c_j) = sgn(c_r) or |c_j| >= |c_r|;
///   3. b_rj c_j <= 0  =>  sgn(c_j) = -sgn(c_r);
///   4. b_ij c_j >= 0 (i,j != r)  =>  sgn(c_i) = sgn(c_j).
/// Condition 2 additionally requires b_rj != 0 unless relaxed; on abundant
/// states the two readings cannot differ.
struct BaseConditionReport {
  int v = 0;
  std::array<bool, 4> bullets{true, true, true, true};
  std::vector<BulletWitness> witnesses;
  bool all_hold() const {
    return bullets[0] && bullets[1] && bullets[2] && bullets[3];
  }
};

BaseConditionReport evaluate_sign_conditions(const ExtendedQuiver& state,
                                             int r,
                                             bool require_nonzero_b = true);

/// The four conditions evaluated on mu_v(q); these are the hypotheses a
/// starting ice quiver must satisfy for trajectory verification. Framings
/// and coframings satisfy them for every v.
BaseConditionReport check_base_conditions(const ExtendedQuiver& q, int v,
                                          bool require_nonzero_b = true);

enum class TrajectoryMode { Fork, AbundantAcyclic, Rank3Cyclic };

struct TrajectoryStep {
  int prefix_len = 0;
  int r = 0;
  std::vector<RowSign> signs;
  std::array<bool, 4> bullets{true, true, true, true};
  bool return_sign_ok = true;  // fork mode only
  std::vector<BulletWitness> violations;
};

struct TrajectoryReport {
  TrajectoryMode mode = TrajectoryMode::Fork;
  BaseConditionReport base;
  std::vector<TrajectoryStep> steps;
  bool ok = true;
  // True if the strict (b != 0) and relaxed readings of condition 2 ever
  // disagreed along the trajectory.
  bool readings_diverged = false;
};

/// Checks the four sign conditions after every prefix of w (which must be
/// reduced and begin with v). The mode names the structural precondition on
/// mu_v(q): a fork returned to v, an abundant acyclic quiver with v a sink
/// or source, or a mutation-cyclic quiver on three vertices. Fork mode
/// additionally checks the point-of-return inequality: b_ir c_r >= 0
/// implies sgn(c_i) = -sgn(c_r) and |c_i| >= |c_r|. Precondition failures
/// throw; condition violations are recorded, not thrown.
TrajectoryReport verify_trajectory(const ExtendedQuiver& q, int v,
                                   const MutationSequence& w,
                                   TrajectoryMode mode,
                                   bool require_nonzero_b = true);

enum class CoherenceKind { Strict, Uniform, TriviallyCoherent, Violated };

const char* to_string(CoherenceKind k);

/// Verdict of a bounded class exploration. Strict/Uniform describe only
/// the visited states; they certify the whole class when exhausted is true.
struct CoherenceVerdict {
  CoherenceKind kind = CoherenceKind::Strict;
  int depth = 0;
  bool exhausted = false;
  long long nodes = 0;
  MutationSequence witness;  // Violated only
  int witness_vertex = 0;
};

CoherenceVerdict bfs_sign_coherence(const ExtendedQuiver& q, int depth);

struct NoAllRedVerdict {
  bool all_red_found = false;
  MutationSequence witness;  // an all-red state would falsify the theory
  int depth = 0;
  long long nodes = 0;
  // Sign-condition failures at visited nodes; must stay empty for genuine
  // mutation-cyclic rank-3 input.
  std::vector<std::pair<std::vector<int>, BulletWitness>> assertion_failures;
};

/// Explores the framed quiver of a mutation-cyclic rank-3 quiver and checks
/// at every node that the sign conditions hold and that the all-red
/// obstruction is in force. Throws NotRank3CyclicError when the descent
/// classifier rejects the input.
NoAllRedVerdict check_no_all_red(const QuiverMatrix& q, int depth);

}  // namespace forkred
