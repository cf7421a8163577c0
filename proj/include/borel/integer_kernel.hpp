#ifndef BOREL_INTEGER_KERNEL_HPP
#define BOREL_INTEGER_KERNEL_HPP

// Exact row reduction and nullspaces over the integers. No division ever
// leaves the integers: elimination is fraction-free and every row is divided
// by the gcd of its entries afterwards.

#include "borel/errors.hpp"

#include <Eigen/Core>

#include <numeric>
#include <type_traits>
#include <vector>

namespace borel {

template <typename Scalar>
using IntMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

template <typename Scalar>
Scalar checked_mul(Scalar a, Scalar b) {
  Scalar out;
  if (__builtin_mul_overflow(a, b, &out)) throw CapacityError("integer overflow in exact elimination");
  return out;
}

template <typename Scalar>
Scalar checked_sub(Scalar a, Scalar b) {
  Scalar out;
  if (__builtin_sub_overflow(a, b, &out)) throw CapacityError("integer overflow in exact elimination");
  return out;
}

/// Divides `row` by the gcd of its entries and makes the first nonzero entry
/// positive.
template <typename RowExpr>
void make_primitive(RowExpr&& row) {
  using Scalar = typename std::decay_t<RowExpr>::Scalar;
  Scalar g = 0;
  for (Eigen::Index j = 0; j < row.size(); ++j) g = std::gcd(g, row(j));
  if (g == 0) return;
  for (Eigen::Index j = 0; j < row.size(); ++j) {
    if (row(j) != 0) {
      if (row(j) < 0) g = -g;
      break;
    }
  }
  row /= g;
}

} // namespace detail

/// Reduced row echelon form with integer-cleared rows: every pivot column is
/// zero outside its pivot row, rows are primitive with a positive leading
/// entry, and zero rows are dropped. `pivots`, if given, receives the pivot
/// column of each output row.
template <typename Derived>
IntMatrix<typename Derived::Scalar> integer_row_reduce(const Eigen::MatrixBase<Derived>& input,
                                                       std::vector<Eigen::Index>* pivots = nullptr) {
  using Scalar = typename Derived::Scalar;
  static_assert(std::is_integral_v<Scalar>, "integer_row_reduce needs an integral scalar");
  IntMatrix<Scalar> m = input;
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < m.cols() && rank < m.rows(); ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = rank; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      if (p < 0 || std::abs(m(i, c)) < std::abs(m(p, c))) p = i;
    }
    if (p < 0) continue;
    m.row(p).swap(m.row(rank));
    detail::make_primitive(m.row(rank));
    const Scalar pivot = m(rank, c);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == rank || m(i, c) == 0) continue;
      const Scalar factor = m(i, c);
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        m(i, j) = detail::checked_sub(detail::checked_mul(pivot, m(i, j)),
                                      detail::checked_mul(factor, m(rank, j)));
      detail::make_primitive(m.row(i));
    }
    pivot_cols.push_back(c);
    ++rank;
  }
  if (pivots) *pivots = pivot_cols;
  return m.topRows(rank);
}

/// Basis of { x : m x = 0 }, one vector per row, in the same normalized
/// echelon form as integer_row_reduce. A matrix with no rows has the full
/// space as its kernel (identity basis).
template <typename Derived>
IntMatrix<typename Derived::Scalar> integer_nullspace(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.cols();
  std::vector<Eigen::Index> pivots;
  const IntMatrix<Scalar> reduced = integer_row_reduce(m, &pivots);

  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<Eigen::Matrix<Scalar, 1, Eigen::Dynamic>> vectors;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    // x_f = L, x_{p_i} = -reduced(i, f) * L / reduced(i, p_i)
    Scalar lcm = 1;
    for (Eigen::Index i = 0; i < reduced.rows(); ++i)
      if (reduced(i, f) != 0) lcm = std::lcm(lcm, reduced(i, pivots[static_cast<std::size_t>(i)]));
    Eigen::Matrix<Scalar, 1, Eigen::Dynamic> v = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>::Zero(n);
    v(f) = lcm;
    for (Eigen::Index i = 0; i < reduced.rows(); ++i) {
      const Scalar lead = reduced(i, pivots[static_cast<std::size_t>(i)]);
      v(pivots[static_cast<std::size_t>(i)]) = -detail::checked_mul(reduced(i, f), lcm / lead);
    }
    vectors.push_back(std::move(v));
  }
  IntMatrix<Scalar> basis(static_cast<Eigen::Index>(vectors.size()), n);
  for (std::size_t k = 0; k < vectors.size(); ++k) basis.row(static_cast<Eigen::Index>(k)) = vectors[k];
  return integer_row_reduce(basis);
}

} // namespace borel

#endif // BOREL_INTEGER_KERNEL_HPP
