#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "tenrange/errors.hpp"

namespace tenrange {

using scalar = std::complex<double>;
using Shape = std::vector<std::size_t>;

// 1-based positions, one per mode.
using MultiIndex = std::vector<std::size_t>;

// Product of shape[first..last) extents; empty range gives 1.
std::size_t shape_product(const Shape& shape, std::size_t first, std::size_t last);

// A bijection on {1,...,M}, stored as the image sequence.
struct Permutation {
    std::vector<std::size_t> image;

    explicit Permutation(std::vector<std::size_t> img);
    std::size_t size() const { return image.size(); }
    Permutation inverse() const;
};

/// Dense complex tensor with a declared row/column mode partition.
///
/// Entries are stored row-major (last index varies fastest), 1-based in the
/// API and 0-based internally. Values are immutable after construction; all
/// operations return new tensors, so sharing across threads is safe.
class Tensor {
  public:
    Tensor(Shape shape, std::size_t row_modes, std::vector<scalar> entries);

    const Shape& shape() const { return shape_; }
    std::size_t order() const { return shape_.size(); }
    std::size_t extent(std::size_t mode) const { return shape_[mode]; }
    std::size_t row_modes() const { return row_modes_; }
    std::size_t col_modes() const { return shape_.size() - row_modes_; }
    Shape row_shape() const;
    Shape col_shape() const;
    std::size_t row_size() const { return shape_product(shape_, 0, row_modes_); }
    std::size_t col_size() const { return shape_product(shape_, row_modes_, shape_.size()); }
    std::size_t size() const { return entries_.size(); }

    // True when the column mode block repeats the row mode block.
    bool is_square() const;

    const std::vector<scalar>& entries() const { return entries_; }
    scalar operator[](std::size_t flat) const { return entries_[flat]; }
    scalar at(const MultiIndex& idx) const;

  private:
    Shape shape_;
    std::size_t row_modes_;
    std::vector<scalar> entries_;
};

// Construction helpers.
Tensor build_tensor(Shape shape, std::size_t row_modes, std::vector<scalar> entries);
Tensor zeros(Shape shape, std::size_t row_modes);
Tensor identity(const Shape& half_shape);

// Einstein product contracting the last n modes of a with the first n modes
// of b. Computed through the unfolding as a dense matrix product.
Tensor einstein_product(const Tensor& a, const Tensor& b, std::size_t n);

// Mode permutation: the entry of a at (i_1,...,i_M) lands at position
// (i_{pi(1)},...,i_{pi(M)}). The partition point keeps its mode count.
Tensor pi_transpose(const Tensor& a, const Permutation& pi);

// Block transpose swapping the row and column mode blocks.
Tensor transpose(const Tensor& a);
Tensor conjugate(const Tensor& a);
Tensor conj_transpose(const Tensor& a);

// <x, y> = sum conj(y) * x over all positions.
scalar inner_product(const Tensor& x, const Tensor& y);
double frobenius_norm(const Tensor& x);

// alpha*a + beta*b, entrywise; shapes and partitions must match.
Tensor linear_combine(scalar alpha, const Tensor& a, scalar beta, const Tensor& b);
Tensor scale(scalar alpha, const Tensor& a);

Tensor hermitian_part(const Tensor& a);
Tensor skew_hermitian_part(const Tensor& a);

// Square tensor with entry u[i...] * conj(v[j...]) at (i...,j...).
Tensor outer_product(const Tensor& u, const Tensor& v);

// Block sum: extents add per mode and the unfolding is diag(unfold(a), unfold(b)).
Tensor direct_sum(const Tensor& a, const Tensor& b);

// Relative entry tolerance for structural predicates (Hermitian, zero).
inline constexpr double kStructureTol = 1e-10;

bool is_hermitian(const Tensor& a, double tol = kStructureTol);

namespace reference {

// Serial brute-force Einstein summation over multi-indices; the test oracle
// for the unfold-and-multiply kernel above.
Tensor einstein_product(const Tensor& a, const Tensor& b, std::size_t n);

}  // namespace reference

}  // namespace tenrange
