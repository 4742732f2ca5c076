/**
 * Exact dense linear algebra on Eigen matrices over a field scalar.
 *
 * Elimination uses a fixed pivot rule (first nonzero row, columns scanned
 * left to right), so ranks, kernels and particular solutions are
 * reproducible bit for bit across runs and row orderings of equal span.
 */

#ifndef SKEWDER_LINALG_HPP
#define SKEWDER_LINALG_HPP

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "skewder/errors.hpp"
#include "skewder/fields.hpp"

namespace skewder {

template <typename K>
using MatrixX = Eigen::MatrixX<K>;
template <typename K>
using VectorX = Eigen::VectorX<K>;

template <typename K>
bool is_zero_matrix(const MatrixX<K>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <typename K>
bool equal_matrices(const MatrixX<K>& a, const MatrixX<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <typename K>
struct EchelonForm {
  MatrixX<K> rref;
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index rank = 0;
};

/** Reduced row echelon form with the deterministic pivot rule. */
template <typename K>
EchelonForm<K> reduced_row_echelon(MatrixX<K> a) {
  EchelonForm<K> out;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index next_row = 0;
  for (Eigen::Index col = 0; col < cols && next_row < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = next_row; r < rows; ++r) {
      if (!is_zero(a(r, col))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != next_row) a.row(pivot).swap(a.row(next_row));
    const K inv = field_inv(a(next_row, col));
    a.row(next_row) *= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == next_row || is_zero(a(r, col))) continue;
      const K factor = a(r, col);
      a.row(r) -= factor * a.row(next_row);
    }
    out.pivot_cols.push_back(col);
    ++next_row;
  }
  out.rank = next_row;
  out.rref = std::move(a);
  return out;
}

template <typename K>
Eigen::Index rank_of(const MatrixX<K>& a) {
  return reduced_row_echelon<K>(a).rank;
}

/**
 * Kernel basis in the reduced-echelon convention: one column per free
 * column of A, carrying 1 at the free index and the negated reduced
 * coefficients at the pivot indices.
 */
template <typename K>
MatrixX<K> kernel_basis_from(const EchelonForm<K>& ech, Eigen::Index cols) {
  std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
  for (Eigen::Index p : ech.pivot_cols) is_pivot[static_cast<std::size_t>(p)] = 1;
  const Eigen::Index nullity = cols - ech.rank;
  MatrixX<K> basis = MatrixX<K>::Zero(cols, nullity);
  Eigen::Index k = 0;
  for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    basis(free_col, k) = K(1);
    for (Eigen::Index i = 0; i < ech.rank; ++i)
      basis(ech.pivot_cols[static_cast<std::size_t>(i)], k) =
          -ech.rref(i, free_col);
    ++k;
  }
  return basis;
}

template <typename K>
MatrixX<K> kernel_basis(const MatrixX<K>& a) {
  return kernel_basis_from(reduced_row_echelon<K>(a), a.cols());
}

template <typename K>
struct LinearSolution {
  Eigen::Index rank = 0;
  MatrixX<K> kernel;                     // columns form a kernel basis
  std::optional<VectorX<K>> particular;  // absent when inconsistent / no rhs
  bool consistent = true;                // false only when b was given
};

/**
 * Exact Gaussian elimination: rank, kernel basis and, when b is given and
 * the system is consistent, the particular solution with free variables
 * set to zero.
 */
template <typename K>
LinearSolution<K> solve_linear(const MatrixX<K>& a,
                               const std::optional<VectorX<K>>& b = {}) {
  LinearSolution<K> out;
  if (!b) {
    auto ech = reduced_row_echelon<K>(a);
    out.rank = ech.rank;
    out.kernel = kernel_basis_from(ech, a.cols());
    return out;
  }
  if (b->size() != a.rows())
    throw DimensionMismatchError("matrix has " + std::to_string(a.rows()) +
                                 " rows but rhs has " +
                                 std::to_string(b->size()) + " entries");
  MatrixX<K> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = *b;
  auto ech = reduced_row_echelon<K>(std::move(aug));
  out.rank = ech.rank;
  if (!ech.pivot_cols.empty() && ech.pivot_cols.back() == a.cols()) {
    out.consistent = false;
    --out.rank;  // rank of A itself
    ech.pivot_cols.pop_back();
  }
  // Pivot columns of [A|b] restricted to A's columns are exactly A's.
  EchelonForm<K> of_a;
  of_a.rank = out.rank;
  of_a.pivot_cols = ech.pivot_cols;
  of_a.rref = ech.rref.leftCols(a.cols());
  out.kernel = kernel_basis_from(of_a, a.cols());
  if (out.consistent) {
    VectorX<K> x = VectorX<K>::Zero(a.cols());
    for (Eigen::Index i = 0; i < out.rank; ++i)
      x(of_a.pivot_cols[static_cast<std::size_t>(i)]) = ech.rref(i, a.cols());
    out.particular = std::move(x);
  }
  return out;
}

/**
 * A growing row space kept in reduced echelon form. Supports incremental
 * rank computation and membership tests without re-eliminating from
 * scratch; used for spans of derivations and coboundaries.
 */
template <typename K>
class RowSpace {
 public:
  explicit RowSpace(Eigen::Index ambient_dim) : dim_(ambient_dim) {}

  Eigen::Index ambient_dim() const { return dim_; }
  Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }

  /** Inserts v's residue; returns true when the rank grew. */
  bool insert(VectorX<K> v) {
    Eigen::Index pivot = reduce(v);
    if (pivot < 0) return false;
    v *= field_inv(v(pivot));
    for (auto& row : rows_) {
      if (!is_zero(row.vec(pivot))) row.vec -= row.vec(pivot) * v;
    }
    auto pos = rows_.begin();
    while (pos != rows_.end() && pos->pivot < pivot) ++pos;
    rows_.insert(pos, Row{pivot, std::move(v)});
    return true;
  }

  bool contains(VectorX<K> v) const { return reduce(v) < 0; }

  /** The stored basis as a rank x dim matrix (rows in pivot order). */
  MatrixX<K> basis_matrix() const {
    MatrixX<K> m(rank(), dim_);
    for (Eigen::Index i = 0; i < rank(); ++i)
      m.row(i) = rows_[static_cast<std::size_t>(i)].vec.transpose();
    return m;
  }

  /** The row space as a reduced echelon form (it is one by construction). */
  EchelonForm<K> echelon() const {
    EchelonForm<K> ech;
    ech.rref = basis_matrix();
    ech.rank = rank();
    for (const auto& row : rows_) ech.pivot_cols.push_back(row.pivot);
    return ech;
  }

 private:
  struct Row {
    Eigen::Index pivot;
    VectorX<K> vec;
  };

  // Reduces v against the stored rows; returns its pivot index, -1 if zero.
  Eigen::Index reduce(VectorX<K>& v) const {
    for (const auto& row : rows_) {
      if (!is_zero(v(row.pivot))) v -= v(row.pivot) * row.vec;
    }
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (!is_zero(v(i))) return i;
    return -1;
  }

  Eigen::Index dim_;
  std::vector<Row> rows_;
};

}  // namespace skewder

#endif  // SKEWDER_LINALG_HPP
