#ifndef POSLAB_BAREISS_HPP
#define POSLAB_BAREISS_HPP

#include <Eigen/Core>

#include <utility>

namespace poslab {

/// Determinant by fraction-free (Bareiss) elimination.
///
/// Every intermediate division is exact, so for an integral-domain or field
/// scalar (integers, rationals) the result carries no rounding at all. A zero
/// pivot is handled by swapping in a later row; if none exists the matrix is
/// singular.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  eigen_assert(input.rows() == input.cols());
  const Eigen::Index n = input.rows();
  if (n == 0) return Scalar(1);

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = input;
  Scalar previous(1);
  bool flipped = false;

  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == Scalar(0)) {
      Eigen::Index swap = k + 1;
      while (swap < n && a(swap, k) == Scalar(0)) ++swap;
      if (swap == n) return Scalar(0);
      a.row(k).swap(a.row(swap));
      flipped = !flipped;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
      a(i, k) = Scalar(0);
    }
    previous = a(k, k);
  }
  Scalar det = a(n - 1, n - 1);
  return flipped ? Scalar(-det) : det;
}

}  // namespace poslab

#endif  // POSLAB_BAREISS_HPP
