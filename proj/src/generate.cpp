#include "tenrange/generate.hpp"

#include <cmath>
#include <numbers>

#include "tenrange/dense.hpp"

namespace tenrange::generate {

std::uint64_t Rng::next_u64() {
    // splitmix64 step: platform-independent stream for a given seed
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

scalar Rng::complex_uniform() {
    const double re = uniform(-1.0, 1.0);
    return scalar(re, uniform(-1.0, 1.0));
}

Tensor random_tensor(const Shape& shape, std::size_t row_modes, Rng& rng) {
    std::vector<scalar> entries(shape_product(shape, 0, shape.size()));
    for (scalar& v : entries) v = rng.complex_uniform();
    return Tensor(shape, row_modes, std::move(entries));
}

Tensor random_square(const Shape& half_shape, Rng& rng) {
    Shape shape = half_shape;
    shape.insert(shape.end(), half_shape.begin(), half_shape.end());
    return random_tensor(shape, half_shape.size(), rng);
}

Tensor random_unit(const Shape& shape, Rng& rng) {
    Tensor t = random_tensor(shape, shape.size(), rng);
    double n = frobenius_norm(t);
    while (n < 1e-8) {  // essentially impossible, but keep the draw total
        t = random_tensor(shape, shape.size(), rng);
        n = frobenius_norm(t);
    }
    return scale(1.0 / n, t);
}

Tensor random_hermitian(const Shape& half_shape, Rng& rng) {
    return hermitian_part(random_square(half_shape, rng));
}

namespace {

// Modified Gram-Schmidt on the columns, two passes; re-draws a column from
// rng if it falls inside the span of the previous ones.
void orthonormalize_columns(DenseMatrix& m, Rng& rng) {
    for (std::size_t c = 0; c < m.cols; ++c) {
        for (int tries = 0; tries < 64; ++tries) {
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t j = 0; j < c; ++j) {
                    scalar dot = 0;
                    for (std::size_t r = 0; r < m.rows; ++r)
                        dot += std::conj(m.at(r, j)) * m.at(r, c);
                    for (std::size_t r = 0; r < m.rows; ++r) m.at(r, c) -= dot * m.at(r, j);
                }
            }
            double nrm = 0;
            for (std::size_t r = 0; r < m.rows; ++r) nrm += std::norm(m.at(r, c));
            nrm = std::sqrt(nrm);
            if (nrm > 1e-6) {
                for (std::size_t r = 0; r < m.rows; ++r) m.at(r, c) /= nrm;
                break;
            }
            for (std::size_t r = 0; r < m.rows; ++r) m.at(r, c) = rng.complex_uniform();
        }
    }
}

DenseMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    DenseMatrix m(rows, cols);
    for (scalar& v : m.entries) v = rng.complex_uniform();
    return m;
}

}  // namespace

Tensor random_unitary(const Shape& half_shape, Rng& rng) {
    const std::size_t n = shape_product(half_shape, 0, half_shape.size());
    DenseMatrix m = random_matrix(n, n, rng);
    orthonormalize_columns(m, rng);
    return fold(m, half_shape, half_shape);
}

Tensor random_isometry(const Shape& row_shape, const Shape& col_shape, Rng& rng) {
    const std::size_t rows = shape_product(row_shape, 0, row_shape.size());
    const std::size_t cols = shape_product(col_shape, 0, col_shape.size());
    if (rows < cols)
        throw std::invalid_argument("random_isometry requires row size >= column size");
    DenseMatrix m = random_matrix(rows, cols, rng);
    orthonormalize_columns(m, rng);
    return fold(m, row_shape, col_shape);
}

Tensor random_normal(const Shape& half_shape, Rng& rng, std::vector<scalar>* eigenvalues) {
    const std::size_t n = shape_product(half_shape, 0, half_shape.size());
    DenseMatrix u = random_matrix(n, n, rng);
    orthonormalize_columns(u, rng);
    std::vector<scalar> lam(n);
    for (scalar& v : lam)
        v = std::polar(rng.uniform(0.3, 1.5), rng.uniform(0.0, 2.0 * std::numbers::pi));
    DenseMatrix d(n, n);
    for (std::size_t k = 0; k < n; ++k) d.at(k, k) = lam[k];
    DenseMatrix a = kernels::matmul(u, kernels::matmul(d, conj_transpose(u)));
    if (eigenvalues) *eigenvalues = std::move(lam);
    return fold(a, half_shape, half_shape);
}

Tensor random_diagonal(const Shape& half_shape, Rng& rng) {
    const std::size_t n = shape_product(half_shape, 0, half_shape.size());
    DenseMatrix d(n, n);
    for (std::size_t k = 0; k < n; ++k)
        d.at(k, k) = std::polar(rng.uniform(0.3, 1.5), rng.uniform(0.0, 2.0 * std::numbers::pi));
    return fold(d, half_shape, half_shape);
}

Tensor random_rank_one(const Shape& half_shape, Rng& rng) {
    Tensor u = random_unit(half_shape, rng);
    Tensor v = random_unit(half_shape, rng);
    return outer_product(u, v);
}

Tensor random_rank_deficient(const Shape& half_shape, std::size_t rank, Rng& rng) {
    const std::size_t n = shape_product(half_shape, 0, half_shape.size());
    if (rank == 0 || rank >= n)
        throw std::invalid_argument("random_rank_deficient: rank must be in [1, n)");
    std::vector<Tensor> us = random_orthonormal_list(half_shape, rank, rng);
    std::vector<Tensor> vs = random_orthonormal_list(half_shape, rank, rng);
    Tensor a = scale(rng.uniform(0.5, 1.5), outer_product(us[0], vs[0]));
    for (std::size_t k = 1; k < rank; ++k)
        a = linear_combine(1.0, a, rng.uniform(0.5, 1.5), outer_product(us[k], vs[k]));
    return a;
}

std::vector<Tensor> random_orthonormal_list(const Shape& shape, std::size_t count, Rng& rng) {
    const std::size_t n = shape_product(shape, 0, shape.size());
    if (count > n)
        throw std::invalid_argument("random_orthonormal_list: count exceeds the dimension");
    DenseMatrix m = random_matrix(n, count, rng);
    orthonormalize_columns(m, rng);
    std::vector<Tensor> out;
    out.reserve(count);
    for (std::size_t c = 0; c < count; ++c) {
        std::vector<scalar> col(n);
        for (std::size_t r = 0; r < n; ++r) col[r] = m.at(r, c);
        out.push_back(Tensor(shape, shape.size(), std::move(col)));
    }
    return out;
}

}  // namespace tenrange::generate
