#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "annulus/linalg.hpp"

using namespace annulus;

namespace {

ComplexMatrix random_matrix(int n, unsigned seed) {
  std::mt19937 gen(seed);
  std::normal_distribution<double> dist;
  ComplexMatrix A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = Complex(dist(gen), dist(gen));
  return A;
}

std::vector<Complex> random_band(int n, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Complex> band(n);
  for (auto& b : band) b = Complex(dist(gen), dist(gen));
  band[0] += Complex(3.0, 0.0);
  return band;
}

}  // namespace

TEST_CASE("dense solve reproduces the right-hand side") {
  const ComplexMatrix A = random_matrix(12, 7);
  const ComplexVector b = random_matrix(12, 8).col(0);
  const ComplexVector x = solve_dense(A, b);
  const double cond = condition_number_2norm(A);
  CHECK((A * x - b).norm() <= cond * 1e-14 * b.norm());
}

TEST_CASE("2x2 system by hand") {
  ComplexMatrix A(2, 2);
  A << Complex(2, 0), Complex(0, 1), Complex(1, 0), Complex(3, 0);
  ComplexVector b(2);
  b << Complex(1, 0), Complex(0, 2);
  const ComplexVector x = solve_dense(A, b);
  // Cramer's rule: det = 6 - i
  const Complex det(6, -1);
  CHECK(std::abs(x(0) - (Complex(3, 0) - Complex(0, 1) * Complex(0, 2)) / det) < 1e-15);
  CHECK(std::abs(x(1) - (Complex(2, 0) * Complex(0, 2) - Complex(1, 0)) / det) < 1e-15);
}

TEST_CASE("singular matrices are reported") {
  ComplexMatrix A(2, 2);
  A << 1.0, 2.0, 2.0, 4.0;
  CHECK_THROWS_AS(solve_dense(A, ComplexVector::Ones(2)), SingularMatrixError);
  CHECK_THROWS_AS(DenseFactorization{A}, SingularMatrixError);
  CHECK(condition_number_2norm(A) == std::numeric_limits<double>::infinity());
}

TEST_CASE("condition number of a diagonal matrix") {
  ComplexMatrix D = ComplexMatrix::Zero(3, 3);
  D(0, 0) = 10.0;
  D(1, 1) = Complex(0, 2);
  D(2, 2) = -1.0;
  CHECK(condition_number_2norm(D) == doctest::Approx(10.0));
  CHECK(condition_number_2norm(ComplexMatrix::Identity(5, 5)) == doctest::Approx(1.0));
}

TEST_CASE("Toeplitz layout") {
  const std::vector<Complex> band{1.0, 2.0, 3.0};
  const ComplexMatrix U = toeplitz_matrix(band, 4);
  CHECK(U(0, 0) == Complex(1.0));
  CHECK(U(0, 2) == Complex(3.0));
  CHECK(U(1, 2) == Complex(2.0));
  CHECK(U(0, 3) == Complex(0.0));
  CHECK(U(2, 0) == Complex(0.0));
  const ComplexMatrix L = toeplitz_matrix(band, 4, Triangle::lower);
  CHECK(L == U.transpose());
}

TEST_CASE("triangular Toeplitz substitution agrees with dense LU") {
  for (Triangle shape : {Triangle::upper, Triangle::lower}) {
    for (int n : {1, 5, 40}) {
      const auto band = random_band(n, 11 + n);
      const ComplexVector rhs = random_matrix(n, 3 + n).col(0);
      const ComplexVector fast = solve_triangular_toeplitz(band, rhs, shape);
      const ComplexVector dense = solve_dense(toeplitz_matrix(band, n, shape), rhs);
      CHECK((fast - dense).norm() <= 1e-12 * dense.norm());
    }
  }
}

TEST_CASE("band shorter than the system is zero padded") {
  const std::vector<Complex> band{2.0, 1.0};
  ComplexVector rhs(3);
  rhs << 5.0, 5.0, 4.0;
  const ComplexVector x = solve_triangular_toeplitz(band, rhs);
  CHECK(std::abs(x(2) - 2.0) < 1e-15);
  CHECK(std::abs(x(1) - 1.5) < 1e-15);
  CHECK(std::abs(x(0) - 1.75) < 1e-15);
}

TEST_CASE("zero diagonal is singular") {
  const std::vector<Complex> band{0.0, 1.0};
  CHECK_THROWS_AS(solve_triangular_toeplitz(band, ComplexVector::Ones(2)), SingularMatrixError);
}

TEST_CASE("factorisation reuse") {
  const ComplexMatrix A = random_matrix(6, 21);
  const DenseFactorization lu(A);
  for (unsigned s = 0; s < 3; ++s) {
    const ComplexVector b = random_matrix(6, 30 + s).col(1);
    CHECK((A * lu.solve(b) - b).norm() < 1e-12 * b.norm() * condition_number_2norm(A));
  }
  CHECK_THROWS_AS(static_cast<void>(lu.solve(ComplexVector::Ones(4))), std::invalid_argument);
}
