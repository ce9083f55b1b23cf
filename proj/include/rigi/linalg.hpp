#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "rigi/field.hpp"

namespace rigi {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using FpMatrix = DenseMatrix<Fp>;
using FpVector = DenseVector<Fp>;

namespace detail {

/// In-place Gaussian elimination over an exact field.  Pivots on the first
/// nonzero entry of each column; with `reduced` the matrix ends in reduced
/// row echelon form with unit pivots.  Returns the pivot column indices.
template <typename Scalar>
std::vector<int> eliminate(DenseMatrix<Scalar>& m, bool reduced) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  std::vector<int> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot_row = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (!(m(i, c) == Scalar(0))) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != r) m.row(pivot_row).swap(m.row(r));

    const Scalar inv = Scalar(1) / m(r, c);
    Scalar* prow = m.row(r).data();
    for (Eigen::Index j = c; j < cols; ++j) prow[j] = prow[j] * inv;

    const Eigen::Index start = reduced ? 0 : r + 1;
    for (Eigen::Index i = start; i < rows; ++i) {
      if (i == r) continue;
      const Scalar f = m(i, c);
      if (f == Scalar(0)) continue;
      Scalar* row = m.row(i).data();
      row[c] = Scalar(0);
      for (Eigen::Index j = c + 1; j < cols; ++j) row[j] = row[j] - f * prow[j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace detail

/// Rank over the scalar's field.
template <typename Derived>
int rank(const Eigen::MatrixBase<Derived>& m) {
  DenseMatrix<typename Derived::Scalar> work = m;
  return static_cast<int>(detail::eliminate(work, /*reduced=*/false).size());
}

/// Basis of the right kernel {v : M v = 0}; empty at full column rank.
/// One basis vector per free column, in ascending column order.
template <typename Derived>
std::vector<DenseVector<typename Derived::Scalar>> right_kernel_basis(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  DenseMatrix<Scalar> work = m;
  const std::vector<int> pivots = detail::eliminate(work, /*reduced=*/true);
  const Eigen::Index cols = work.cols();

  std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = 1;

  std::vector<DenseVector<Scalar>> basis;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    DenseVector<Scalar> v = DenseVector<Scalar>::Constant(cols, Scalar(0));
    v(free) = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v(pivots[r]) = -work(static_cast<Eigen::Index>(r), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Random element of the left kernel {w : w^T M = 0}, as a combination of a
/// kernel basis with coefficients drawn uniformly from [1, p-1]; nonzero
/// whenever the left kernel is nontrivial.  Deterministic given the rng state.
inline std::optional<FpVector> random_left_kernel_vector(const FpMatrix& m, SeededRng& rng) {
  const std::vector<FpVector> basis = right_kernel_basis(m.transpose());
  if (basis.empty()) return std::nullopt;
  FpVector w = FpVector::Constant(m.rows(), Fp(0));
  for (const FpVector& b : basis) {
    const Fp coeff = rng.field_nonzero();
    for (Eigen::Index i = 0; i < w.size(); ++i) w(i) += coeff * b(i);
  }
  return w;
}

inline std::optional<FpVector> random_left_kernel_vector(const FpMatrix& m, std::uint64_t seed) {
  SeededRng rng(seed);
  return random_left_kernel_vector(m, rng);
}

}  // namespace rigi
