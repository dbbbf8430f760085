#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <vector>

#include "ccsched/errors.hpp"
#include "ccsched/rational.hpp"

namespace ccs {

enum class SimplexStatus { Optimal, Unbounded, PivotLimit };

/// Dense primal simplex for packing programs
///
///     max  c^T u   s.t.  A u <= b,  u >= 0,   with b >= 0,
///
/// started from the all-slack basis (always feasible). Columns can be added
/// after a solve and the next solve warm-starts from the current basis, which
/// is how the cutting-plane loop appends cuts: every primal cut is a new dual
/// column. Entering and leaving variables follow Bland's rule, so runs are
/// deterministic and cannot cycle.
///
/// The row duals y (shadow prices of A u <= b) solve the covering program
/// min b^T y s.t. A^T y >= c, y >= 0.
template <class Scalar>
class PackingSimplex {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

  explicit PackingSimplex(Vector capacity)
      : rows_(capacity.size()),
        tableau_(Matrix::Identity(capacity.size(), capacity.size())),
        rhs_(std::move(capacity)),
        reduced_(RowVector::Zero(rows_)),
        value_(0),
        basis_(rows_) {
    for (Eigen::Index r = 0; r < rows_; ++r) {
      if (rhs_(r) < Scalar(0)) throw SubsolverFailure("packing capacity must be nonnegative");
      basis_[r] = r;
    }
  }

  Eigen::Index rows() const { return rows_; }
  Eigen::Index columns() const { return tableau_.cols() - rows_; }

  /// Appends a structural column; returns its index among structural columns.
  Eigen::Index add_column(const Vector& coefficients, const Scalar& profit) {
    if (coefficients.size() != rows_) throw DimensionMismatch("column length differs from row count");
    const Eigen::Index col = tableau_.cols();
    Vector transformed = tableau_.leftCols(rows_) * coefficients;
    tableau_.conservativeResize(Eigen::NoChange, col + 1);
    tableau_.col(col) = transformed;
    reduced_.conservativeResize(col + 1);
    reduced_(col) = reduced_.head(rows_).dot(coefficients) - profit;
    return col - rows_;
  }

  SimplexStatus solve(std::size_t max_pivots = 100000) {
    const Scalar pivot_tol = ScalarTraits<Scalar>::pivot();
    for (std::size_t iter = 0; iter < max_pivots; ++iter) {
      Eigen::Index entering = -1;
      for (Eigen::Index c = 0; c < tableau_.cols(); ++c)
        if (reduced_(c) < -pivot_tol) {
          entering = c;
          break;
        }
      if (entering < 0) return SimplexStatus::Optimal;

      Eigen::Index leaving = -1;
      Scalar best_ratio;
      for (Eigen::Index r = 0; r < rows_; ++r) {
        const Scalar& a = tableau_(r, entering);
        if (!(a > pivot_tol)) continue;
        Scalar ratio = rhs_(r) / a;
        if (leaving < 0 || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving < 0) return SimplexStatus::Unbounded;
      pivot(leaving, entering);
      ++pivots_;
    }
    return SimplexStatus::PivotLimit;
  }

  Scalar objective() const { return value_; }

  /// Values of the structural columns.
  Vector primal() const {
    Vector u = Vector::Zero(columns());
    for (Eigen::Index r = 0; r < rows_; ++r)
      if (basis_[r] >= rows_) u(basis_[r] - rows_) = rhs_(r);
    return u;
  }

  /// Shadow prices of the rows; the covering solution.
  Vector duals() const { return reduced_.head(rows_).transpose(); }

  std::size_t pivots() const { return pivots_; }

 private:
  void pivot(Eigen::Index row, Eigen::Index col) {
    const Scalar p = tableau_(row, col);
    tableau_.row(row) /= p;
    rhs_(row) /= p;
    for (Eigen::Index r = 0; r < rows_; ++r) {
      if (r == row || tableau_(r, col) == Scalar(0)) continue;
      const Scalar f = tableau_(r, col);
      tableau_.row(r) -= f * tableau_.row(row);
      rhs_(r) -= f * rhs_(row);
    }
    const Scalar d = reduced_(col);
    reduced_ -= d * tableau_.row(row);
    value_ -= d * rhs_(row);
    basis_[row] = col;
    if constexpr (!ScalarTraits<Scalar>::exact) {
      if (!std::isfinite(value_)) throw SubsolverFailure("simplex produced a non-finite objective");
    }
  }

  Eigen::Index rows_;
  Matrix tableau_;  // [B^-1 | B^-1 A]
  Vector rhs_;
  RowVector reduced_;
  Scalar value_;
  std::vector<Eigen::Index> basis_;
  std::size_t pivots_ = 0;
};

}  // namespace ccs
