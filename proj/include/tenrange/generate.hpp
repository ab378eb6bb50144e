#pragma once

#include <cstdint>
#include <vector>

#include "tenrange/tensor.hpp"

namespace tenrange::generate {

/// Deterministic generator: mt19937_64 with a fixed bits-to-double mapping,
/// so streams are reproducible across platforms for a given seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x6a09e667f3bcc909ULL) {}

    std::uint64_t next_u64();
    double uniform();                       // [0, 1)
    double uniform(double lo, double hi);   // [lo, hi)
    scalar complex_uniform();               // re, im uniform on [-1, 1)

  private:
    std::uint64_t state_;
};

Tensor random_tensor(const Shape& shape, std::size_t row_modes, Rng& rng);
Tensor random_square(const Shape& half_shape, Rng& rng);
// Unit-Frobenius order-N tensor with row_modes == order.
Tensor random_unit(const Shape& shape, Rng& rng);
Tensor random_hermitian(const Shape& half_shape, Rng& rng);
// Fold of a column-orthonormalized random matrix.
Tensor random_unitary(const Shape& half_shape, Rng& rng);
// b with b^H * b = identity on the column block; requires row size >= col size.
Tensor random_isometry(const Shape& row_shape, const Shape& col_shape, Rng& rng);
// u * diag(lambda) * u^H with random unitary u; eigenvalues reported via out param.
Tensor random_normal(const Shape& half_shape, Rng& rng, std::vector<scalar>* eigenvalues = nullptr);
// Diagonal unfolding with complex entries of modulus in [0.3, 1.5].
Tensor random_diagonal(const Shape& half_shape, Rng& rng);
// outer(u, v) for random unit u, v.
Tensor random_rank_one(const Shape& half_shape, Rng& rng);
// Sum of r singular triplets from orthonormal lists; rank r < full.
Tensor random_rank_deficient(const Shape& half_shape, std::size_t rank, Rng& rng);
// Gram-Schmidt of random order-N tensors.
std::vector<Tensor> random_orthonormal_list(const Shape& shape, std::size_t count, Rng& rng);

}  // namespace tenrange::generate
