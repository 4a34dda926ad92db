#pragma once

#include <Eigen/Dense>
#include <span>
#include <stdexcept>

#include "annulus/indexed_series.hpp"

namespace annulus {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Partial-pivoted LU solve. Throws SingularMatrixError when a pivot is zero
/// to working precision.
ComplexVector solve_dense(const ComplexMatrix& A, const ComplexVector& b);

/// sigma_max / sigma_min; +infinity for a singular matrix.
double condition_number_2norm(const ComplexMatrix& A);

enum class Triangle { upper, lower };

/// Dense n x n triangular Toeplitz matrix with band[0] on the diagonal and
/// band[j] on the j-th super- (upper) or sub- (lower) diagonal.
ComplexMatrix toeplitz_matrix(std::span<const Complex> band, int n, Triangle shape = Triangle::upper);

/// Substitution solve of toeplitz_matrix(band, rhs.size(), shape) x = rhs.
/// Throws SingularMatrixError if band[0] == 0.
ComplexVector solve_triangular_toeplitz(std::span<const Complex> band, const ComplexVector& rhs,
                                        Triangle shape = Triangle::upper);

/// LU factorisation reused across many right-hand sides.
class DenseFactorization {
 public:
  explicit DenseFactorization(const ComplexMatrix& A);
  [[nodiscard]] ComplexVector solve(const ComplexVector& b) const;

 private:
  Eigen::PartialPivLU<ComplexMatrix> lu_;
};

}  // namespace annulus
