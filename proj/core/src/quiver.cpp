#include "forkred/quiver.hpp"

#include <algorithm>

namespace forkred {

namespace {

void check_skew(const IntMatrix& b, int n) {
  for (int i = 0; i < n; ++i) {
    if (b.at(i, i) != 0)
      throw QuiverError("exchange matrix has nonzero diagonal at " +
                        std::to_string(i + 1));
    for (int j = i + 1; j < n; ++j) {
      if (b.at(i, j) != -b.at(j, i))
        throw QuiverError("exchange matrix not skew-symmetric at (" +
                          std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ")");
    }
  }
}

void check_mutable_index(int k, int n, int m) {
  if (k >= n + 1 && k <= n + m)
    throw FrozenVertexError("vertex " + std::to_string(k) + " is frozen");
  if (k < 1 || k > n)
    throw std::out_of_range("vertex index " + std::to_string(k) +
                            " out of range 1.." + std::to_string(n));
}

}  // namespace

QuiverMatrix::QuiverMatrix(int n) : n(n), b(n, n) {
  if (n < 0) throw QuiverError("negative vertex count");
}

QuiverMatrix::QuiverMatrix(int n, IntMatrix mat) : n(n), b(std::move(mat)) {
  if (n < 0) throw QuiverError("negative vertex count");
  if (b.rows() != n || b.cols() != n)
    throw QuiverError("exchange matrix shape mismatch");
  check_skew(b, n);
}

void QuiverMatrix::set_arrows(int i, int j, const Int& w) {
  if (i == j && w != 0) throw QuiverError("loops are not allowed");
  b.at(i - 1, j - 1) = w;
  b.at(j - 1, i - 1) = -w;
}

ExtendedQuiver::ExtendedQuiver(int n, int m)
    : n(n), m(m), b(n, n), c(n, m) {
  if (n < 0 || m < 0) throw QuiverError("negative vertex count");
}

ExtendedQuiver::ExtendedQuiver(QuiverMatrix q, IntMatrix cmat)
    : n(q.n), m(cmat.cols()), b(std::move(q.b)), c(std::move(cmat)) {
  if (c.rows() != n) throw QuiverError("coefficient matrix shape mismatch");
}

MutationSequence::MutationSequence(std::vector<int> entries)
    : entries_(std::move(entries)) {
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 1)
      throw QuiverError("vertex indices are 1-based");
    if (i > 0 && entries_[i] == entries_[i - 1])
      throw NonReducedError("sequence repeats vertex " +
                            std::to_string(entries_[i]) + " at position " +
                            std::to_string(i + 1));
  }
}

void MutationSequence::push_back(int k) {
  if (k < 1) throw QuiverError("vertex indices are 1-based");
  if (!entries_.empty() && entries_.back() == k)
    throw NonReducedError("immediate repeat of vertex " + std::to_string(k));
  entries_.push_back(k);
}

void MutationSequence::append(const MutationSequence& tail) {
  for (int k : tail) push_back(k);
}

bool reduce_check(const std::vector<int>& entries) {
  for (size_t i = 1; i < entries.size(); ++i)
    if (entries[i] == entries[i - 1]) return false;
  return true;
}

const char* to_string(VertexColor c) {
  switch (c) {
    case VertexColor::Red: return "red";
    case VertexColor::Green: return "green";
    case VertexColor::Blue: return "blue";
  }
  return "?";
}

const char* to_string(RowSign s) {
  switch (s) {
    case RowSign::Positive: return "positive";
    case RowSign::Negative: return "negative";
    case RowSign::Zero: return "zero";
    case RowSign::Mixed: return "mixed";
  }
  return "?";
}

ExtendedQuiver mutate(const ExtendedQuiver& q, int k1) {
  check_mutable_index(k1, q.n, q.m);
  const int k = k1 - 1;
  ExtendedQuiver out = q;

  // Entry (i,j) with i,j != k changes only when b_ik * b_kj > 0, by
  // |b_ik| * b_kj. Row and column k are negated.
  for (int i = 0; i < q.n; ++i) {
    for (int j = 0; j < q.n; ++j) {
      if (i == k || j == k) {
        out.b.at(i, j) = -q.b.at(i, j);
      } else if (sign_of(q.b.at(i, k)) * sign_of(q.b.at(k, j)) > 0) {
        Int grow = abs(q.b.at(i, k));
        grow *= q.b.at(k, j);
        out.b.at(i, j) = q.b.at(i, j) + grow;
      }
    }
  }
  for (int i = 0; i < q.n; ++i) {
    for (int j = 0; j < q.m; ++j) {
      if (i == k) {
        out.c.at(i, j) = -q.c.at(i, j);
      } else if (sign_of(q.b.at(i, k)) * sign_of(q.c.at(k, j)) > 0) {
        Int grow = abs(q.b.at(i, k));
        grow *= q.c.at(k, j);
        out.c.at(i, j) = q.c.at(i, j) + grow;
      }
    }
  }
  return out;
}

QuiverMatrix mutate(const QuiverMatrix& q, int k) {
  ExtendedQuiver eq(q, IntMatrix(q.n, 0));
  return mutable_part(mutate(eq, k));
}

ExtendedQuiver mutate_seq(const ExtendedQuiver& q, const MutationSequence& w) {
  ExtendedQuiver cur = q;
  for (int k : w) cur = mutate(cur, k);
  return cur;
}

QuiverMatrix mutate_seq(const QuiverMatrix& q, const MutationSequence& w) {
  QuiverMatrix cur = q;
  for (int k : w) cur = mutate(cur, k);
  return cur;
}

ExtendedQuiver frame(const QuiverMatrix& q) {
  ExtendedQuiver out(q, IntMatrix(q.n, q.n));
  for (int i = 0; i < q.n; ++i) out.c.at(i, i) = 1;
  return out;
}

ExtendedQuiver coframe(const QuiverMatrix& q) {
  ExtendedQuiver out(q, IntMatrix(q.n, q.n));
  for (int i = 0; i < q.n; ++i) out.c.at(i, i) = -1;
  return out;
}

RowSign c_row_sign(const ExtendedQuiver& q, int v) {
  if (v < 1 || v > q.n)
    throw std::out_of_range("mutable vertex index out of range");
  bool pos = false, neg = false;
  for (int j = 0; j < q.m; ++j) {
    const int s = sign_of(q.c.at(v - 1, j));
    if (s > 0) pos = true;
    if (s < 0) neg = true;
  }
  if (pos && neg) return RowSign::Mixed;
  if (pos) return RowSign::Positive;
  if (neg) return RowSign::Negative;
  return RowSign::Zero;
}

VertexColor vertex_color(const ExtendedQuiver& q, int v) {
  switch (c_row_sign(q, v)) {
    case RowSign::Positive: return VertexColor::Green;
    case RowSign::Negative: return VertexColor::Red;
    case RowSign::Zero: return VertexColor::Blue;
    case RowSign::Mixed: break;
  }
  throw MixedSignsError(v, "c-vector of vertex " + std::to_string(v) +
                               " has mixed signs");
}

std::vector<VertexColor> vertex_colors(const ExtendedQuiver& q) {
  std::vector<VertexColor> out;
  out.reserve(q.n);
  for (int v = 1; v <= q.n; ++v) out.push_back(vertex_color(q, v));
  return out;
}

std::vector<Int> c_vector(const ExtendedQuiver& q, int v) {
  if (v < 1 || v > q.n)
    throw std::out_of_range("mutable vertex index out of range");
  std::vector<Int> row;
  row.reserve(q.m);
  for (int j = 0; j < q.m; ++j) row.push_back(q.c.at(v - 1, j));
  return row;
}

QuiverMatrix full_subquiver(const QuiverMatrix& q, const std::vector<int>& keep) {
  std::vector<int> idx = keep;
  std::sort(idx.begin(), idx.end());
  for (size_t a = 0; a < idx.size(); ++a) {
    if (idx[a] < 1 || idx[a] > q.n)
      throw std::out_of_range("subquiver vertex out of range");
    if (a > 0 && idx[a] == idx[a - 1])
      throw QuiverError("duplicate vertex in subquiver selection");
  }
  QuiverMatrix out(static_cast<int>(idx.size()));
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = 0; b < idx.size(); ++b)
      out.b.at(static_cast<int>(a), static_cast<int>(b)) =
          q.b.at(idx[a] - 1, idx[b] - 1);
  return out;
}

QuiverMatrix mutable_part(const ExtendedQuiver& q) {
  QuiverMatrix out(q.n);
  out.b = q.b;
  return out;
}

Int total_arrow_weight(const QuiverMatrix& q) {
  Int total = 0;
  for (int i = 0; i < q.n; ++i)
    for (int j = i + 1; j < q.n; ++j) total += abs(q.b.at(i, j));
  return total;
}

}  // namespace forkred
