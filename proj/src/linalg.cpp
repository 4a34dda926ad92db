#include "annulus/linalg.hpp"

#include <limits>

namespace annulus {

namespace {

void require_nonsingular(const Eigen::PartialPivLU<ComplexMatrix>& lu, const ComplexMatrix& A) {
  const double scale = A.cwiseAbs().maxCoeff();
  const auto n = static_cast<double>(A.rows());
  const double tol = n * std::numeric_limits<double>::epsilon() * scale;
  const auto& U = lu.matrixLU();
  for (Eigen::Index i = 0; i < U.rows(); ++i)
    if (!(std::abs(U(i, i)) > tol)) throw SingularMatrixError("solve_dense: matrix is singular to working precision");
}

}  // namespace

DenseFactorization::DenseFactorization(const ComplexMatrix& A) {
  if (A.rows() != A.cols() || A.rows() == 0) throw std::invalid_argument("DenseFactorization: matrix must be square");
  if (!A.allFinite()) throw std::invalid_argument("DenseFactorization: non-finite entry");
  lu_.compute(A);
  require_nonsingular(lu_, A);
}

ComplexVector DenseFactorization::solve(const ComplexVector& b) const {
  if (b.size() != lu_.rows()) throw std::invalid_argument("DenseFactorization: size mismatch");
  return lu_.solve(b);
}

ComplexVector solve_dense(const ComplexMatrix& A, const ComplexVector& b) { return DenseFactorization(A).solve(b); }

double condition_number_2norm(const ComplexMatrix& A) {
  if (A.rows() != A.cols() || A.rows() == 0)
    throw std::invalid_argument("condition_number_2norm: matrix must be square");
  Eigen::JacobiSVD<ComplexMatrix> svd(A);
  const auto& s = svd.singularValues();
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  if (!(smin > 0.0) || smax / smin > 1.0 / std::numeric_limits<double>::epsilon())
    return std::numeric_limits<double>::infinity();
  return smax / smin;
}

ComplexMatrix toeplitz_matrix(std::span<const Complex> band, int n, Triangle shape) {
  ComplexMatrix T = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n && static_cast<std::size_t>(j - i) < band.size(); ++j) {
      if (shape == Triangle::upper)
        T(i, j) = band[static_cast<std::size_t>(j - i)];
      else
        T(j, i) = band[static_cast<std::size_t>(j - i)];
    }
  return T;
}

ComplexVector solve_triangular_toeplitz(std::span<const Complex> band, const ComplexVector& rhs, Triangle shape) {
  if (band.empty() || band[0] == Complex{})
    throw SingularMatrixError("solve_triangular_toeplitz: zero leading coefficient");
  const auto n = rhs.size();
  const auto width = static_cast<Eigen::Index>(band.size());
  ComplexVector x(n);
  if (shape == Triangle::upper) {
    for (Eigen::Index i = n - 1; i >= 0; --i) {
      Complex s = rhs(i);
      for (Eigen::Index j = i + 1; j < n && j - i < width; ++j) s -= band[static_cast<std::size_t>(j - i)] * x(j);
      x(i) = s / band[0];
    }
  } else {
    for (Eigen::Index i = 0; i < n; ++i) {
      Complex s = rhs(i);
      for (Eigen::Index j = std::max<Eigen::Index>(0, i - width + 1); j < i; ++j)
        s -= band[static_cast<std::size_t>(i - j)] * x(j);
      x(i) = s / band[0];
    }
  }
  return x;
}

}  // namespace annulus
