#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "walgebra/rational.hpp"

namespace walgebra::exactla {

/// Sparse vector: (column, value) pairs sorted by column, no stored zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// A linear system over Q.  Rows are sparse; `rhs`, when present, has one
/// entry per row.
class SparseSystem {
 public:
  explicit SparseSystem(std::size_t ncols) : ncols_(ncols) {}

  /// Appends a row. Entries may arrive unsorted and may repeat a column
  /// (values are summed); zeros are dropped.
  void add_row(SparseVector row);
  void add_row(SparseVector row, Rational rhs);

  std::size_t ncols() const { return ncols_; }
  std::size_t nrows() const { return rows_.size(); }
  const std::vector<SparseVector>& rows() const { return rows_; }
  const std::optional<std::vector<Rational>>& rhs() const { return rhs_; }

 private:
  static SparseVector normalize(SparseVector row, std::size_t ncols);

  std::size_t ncols_;
  std::vector<SparseVector> rows_;
  std::optional<std::vector<Rational>> rhs_;
};

struct AffineSolution {
  bool consistent = false;
  /// Canonical solution: every free variable is 0.
  std::vector<Rational> x;
};

/// Exact basis of the kernel of the coefficient matrix (rhs ignored).
/// One vector per free column, with a 1 in that column.
std::vector<SparseVector> solve_homogeneous(const SparseSystem& system);

/// A particular solution with free variables pinned to 0, or an
/// inconsistency flag.  A system without rhs is treated as homogeneous.
AffineSolution solve_affine(const SparseSystem& system);

std::size_t rank(const SparseSystem& system);

/// Incrementally built row-echelon basis of a subspace of Q^n, for
/// membership tests on small dense vectors (Lie subalgebra spans).
class IncrementalBasis {
 public:
  explicit IncrementalBasis(std::size_t n) : n_(n) {}

  /// Adds v if it is independent of the current span; returns whether it was.
  bool add(const std::vector<Rational>& v);
  bool contains(const std::vector<Rational>& v) const;
  std::size_t size() const { return rows_.size(); }
  std::size_t ambient_dim() const { return n_; }

 private:
  std::vector<Rational> reduce(std::vector<Rational> v) const;

  std::size_t n_;
  std::vector<std::vector<Rational>> rows_;  // each normalized: 1 at its pivot
  std::vector<std::size_t> pivots_;
};

/// Densify for tests and small callers.
std::vector<Rational> to_dense(const SparseVector& v, std::size_t n);

}  // namespace walgebra::exactla
