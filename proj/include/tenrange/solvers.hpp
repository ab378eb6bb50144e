#pragma once

#include <cstdint>
#include <vector>

#include "tenrange/dense.hpp"

namespace tenrange::solvers {

// LU with partial pivoting. singular_to_tol marks a zero pivot encountered
// during elimination (determinant is then exactly 0).
struct LuFactors {
    DenseMatrix lu;
    std::vector<std::size_t> perm;
    int sign = 1;
    bool zero_pivot = false;
};

LuFactors lu_factor(DenseMatrix m);
scalar lu_determinant(const LuFactors& f);
// Solves with the factorization; tiny pivots are floored at pivot_floor so
// inverse iteration can solve nearly singular shifted systems.
std::vector<scalar> lu_solve(const LuFactors& f, std::vector<scalar> rhs, double pivot_floor = 0.0);

scalar determinant(const DenseMatrix& m);
DenseMatrix inverse_lu(const DenseMatrix& m);

// Eigenvalues of a general complex matrix: Householder reduction to upper
// Hessenberg followed by explicitly shifted QR with Wilkinson shifts.
// Throws numerical_error after 100*n iterations without deflation.
std::vector<scalar> eigenvalues_qr(DenseMatrix m);

// Unit eigenvector for a computed eigenvalue via shifted inverse iteration.
std::vector<scalar> eigenvector_inverse_iteration(const DenseMatrix& m, scalar lambda,
                                                  std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

// Hermitian eigensystem by cyclic complex Jacobi: real eigenvalues in
// nonincreasing order with orthonormal eigenvector columns.
struct HermitianEig {
    std::vector<double> values;
    DenseMatrix vectors;
};

HermitianEig eigh_jacobi(DenseMatrix m);

// Full SVD by one-sided Jacobi: u (rows x rows) and v (cols x cols) unitary,
// sigma nonincreasing of length min(rows, cols).
struct MatrixSvd {
    DenseMatrix u;
    std::vector<double> sigma;
    DenseMatrix v;
};

MatrixSvd svd_jacobi(const DenseMatrix& m);

// sigma >= eps * max(rows, cols) * sigma_max, the shared rank cutoff.
double rank_tolerance(const MatrixSvd& svd, std::size_t rows, std::size_t cols);

}  // namespace tenrange::solvers
