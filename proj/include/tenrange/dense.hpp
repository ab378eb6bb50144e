#pragma once

#include <cstddef>
#include <vector>

#include "tenrange/tensor.hpp"

namespace tenrange {

/// Dense complex matrix, row-major. The computational backbone: every
/// spectral routine runs on the unfolded image of a tensor.
struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<scalar> entries;

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    scalar& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const scalar& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

DenseMatrix identity_matrix(std::size_t n);
DenseMatrix conj_transpose(const DenseMatrix& m);
DenseMatrix transpose_matrix(const DenseMatrix& m);
DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix scale(scalar alpha, const DenseMatrix& m);
// (m + m^H) / 2
DenseMatrix hermitian_part(const DenseMatrix& m);
double frobenius_norm(const DenseMatrix& m);
std::vector<scalar> matvec(const DenseMatrix& m, const std::vector<scalar>& x);

// Row-major rank of a 1-based multi-index; bijective over the index box.
std::size_t linear_index(const MultiIndex& idx, const Shape& shape);

// Matrix image of a under its declared partition. Order-N tensors with
// row_modes == order unfold to a column vector.
DenseMatrix unfold(const Tensor& a);

// Unfold splitting after `lead_modes` modes regardless of the declared
// partition (used by the Einstein-product kernel).
DenseMatrix unfold_split(const Tensor& a, std::size_t lead_modes);

// Exact inverse of unfold; row_modes of the result is row_shape.size().
Tensor fold(const DenseMatrix& m, const Shape& row_shape, const Shape& col_shape);

namespace kernels {

// Sampling/contraction thread cap: NR_THREADS when set, OpenMP default otherwise.
int max_threads();

// OpenMP-parallel dense product (deterministic: fixed per-element summation order).
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
// Serial reference for the kernel above.
DenseMatrix matmul_serial(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace kernels

}  // namespace tenrange
