#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace forkred {

/// Arbitrary-precision integer. Arrow multiplicities grow super-exponentially
/// under repeated fork mutation, so fixed-width entries are not an option.
using Int = mpz_class;

inline int sign_of(const Int& x) { return sgn(x); }

class QuiverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A c-vector with both strictly positive and strictly negative entries.
class MixedSignsError : public QuiverError {
 public:
  MixedSignsError(int vertex, std::string what)
      : QuiverError(std::move(what)), vertex(vertex) {}
  int vertex;
};

class FrozenVertexError : public QuiverError {
 public:
  using QuiverError::QuiverError;
};

class NonReducedError : public QuiverError {
 public:
  using QuiverError::QuiverError;
};

class CyclicInputError : public QuiverError {
 public:
  using QuiverError::QuiverError;
};

class NotAForkError : public QuiverError {
 public:
  using QuiverError::QuiverError;
};

class BlueVertexError : public QuiverError {
 public:
  using QuiverError::QuiverError;
};

class SinkNotRedError : public QuiverError {
 public:
  using QuiverError::QuiverError;
};

class NotRank3CyclicError : public QuiverError {
 public:
  using QuiverError::QuiverError;
};

/// Dense matrix of big integers, 0-based storage.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

 private:
  int rows_;
  int cols_;
  std::vector<Int> data_;
};

/// Mutable quiver on n vertices as its skew-symmetric exchange matrix B.
/// b(i,j) > 0 means |b(i,j)| arrows i -> j. Vertices are 1-based in the API.
struct QuiverMatrix {
  int n = 0;
  IntMatrix b;

  QuiverMatrix() = default;
  explicit QuiverMatrix(int n);
  QuiverMatrix(int n, IntMatrix b);

  const Int& arrows(int i, int j) const { return b.at(i - 1, j - 1); }
  void set_arrows(int i, int j, const Int& w);

  bool operator==(const QuiverMatrix& o) const {
    return n == o.n && b == o.b;
  }
  bool operator!=(const QuiverMatrix& o) const { return !(*this == o); }
};

/// Ice quiver as an extended exchange matrix [B|C]: n mutable vertices
/// (labelled 1..n) and m frozen vertices (labelled n+1..n+m). Row i of C is
/// the c-vector of mutable vertex i; c(i,j) > 0 means arrows from i to
/// frozen vertex n+j.
struct ExtendedQuiver {
  int n = 0;
  int m = 0;
  IntMatrix b;
  IntMatrix c;

  ExtendedQuiver() = default;
  ExtendedQuiver(int n, int m);
  ExtendedQuiver(QuiverMatrix q, IntMatrix c);

  bool operator==(const ExtendedQuiver& o) const {
    return n == o.n && m == o.m && b == o.b && c == o.c;
  }
  bool operator!=(const ExtendedQuiver& o) const { return !(*this == o); }
};

/// Ordered list of mutable vertex indices; rejects immediate repeats.
class MutationSequence {
 public:
  MutationSequence() = default;
  explicit MutationSequence(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  size_t size() const { return entries_.size(); }
  int back() const { return entries_.back(); }

  void push_back(int k);
  void append(const MutationSequence& tail);

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool operator==(const MutationSequence& o) const {
    return entries_ == o.entries_;
  }

 private:
  std::vector<int> entries_;
};

/// True iff no two consecutive entries are equal.
bool reduce_check(const std::vector<int>& entries);

enum class VertexColor { Red, Green, Blue };
enum class RowSign { Positive, Negative, Zero, Mixed };

const char* to_string(VertexColor c);
const char* to_string(RowSign s);

/// Mutation of [B|C] at mutable vertex k. Value semantics: input untouched.
ExtendedQuiver mutate(const ExtendedQuiver& q, int k);
QuiverMatrix mutate(const QuiverMatrix& q, int k);

/// Left-to-right fold of mutate over a reduced sequence.
ExtendedQuiver mutate_seq(const ExtendedQuiver& q, const MutationSequence& w);
QuiverMatrix mutate_seq(const QuiverMatrix& q, const MutationSequence& w);

/// Attach one frozen companion per vertex with an arrow out of it (C = I).
ExtendedQuiver frame(const QuiverMatrix& q);
/// Companion arrows point into the mutable vertices instead (C = -I).
ExtendedQuiver coframe(const QuiverMatrix& q);

/// Componentwise sign pattern of the c-vector of v. Never throws.
RowSign c_row_sign(const ExtendedQuiver& q, int v);

/// Green iff c_v >= 0 and nonzero, Red iff c_v <= 0 and nonzero, Blue iff
/// c_v = 0. Throws MixedSignsError otherwise.
VertexColor vertex_color(const ExtendedQuiver& q, int v);
std::vector<VertexColor> vertex_colors(const ExtendedQuiver& q);

std::vector<Int> c_vector(const ExtendedQuiver& q, int v);

/// Principal submatrix on the kept vertices (ascending order).
QuiverMatrix full_subquiver(const QuiverMatrix& q, const std::vector<int>& keep);

QuiverMatrix mutable_part(const ExtendedQuiver& q);

/// Sum of arrow multiplicities over all vertex pairs.
Int total_arrow_weight(const QuiverMatrix& q);

}  // namespace forkred
