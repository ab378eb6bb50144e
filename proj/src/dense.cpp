#include "tenrange/dense.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tenrange {

DenseMatrix identity_matrix(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m.at(k, k) = 1.0;
    return m;
}

DenseMatrix conj_transpose(const DenseMatrix& m) {
    DenseMatrix out(m.cols, m.rows);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) out.at(c, r) = std::conj(m.at(r, c));
    return out;
}

DenseMatrix transpose_matrix(const DenseMatrix& m) {
    DenseMatrix out(m.cols, m.rows);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) out.at(c, r) = m.at(r, c);
    return out;
}

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix out(a.rows, a.cols);
    for (std::size_t k = 0; k < out.entries.size(); ++k)
        out.entries[k] = a.entries[k] + b.entries[k];
    return out;
}

DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix out(a.rows, a.cols);
    for (std::size_t k = 0; k < out.entries.size(); ++k)
        out.entries[k] = a.entries[k] - b.entries[k];
    return out;
}

DenseMatrix scale(scalar alpha, const DenseMatrix& m) {
    DenseMatrix out(m.rows, m.cols);
    for (std::size_t k = 0; k < out.entries.size(); ++k) out.entries[k] = alpha * m.entries[k];
    return out;
}

DenseMatrix hermitian_part(const DenseMatrix& m) {
    DenseMatrix out(m.rows, m.cols);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c)
            out.at(r, c) = 0.5 * (m.at(r, c) + std::conj(m.at(c, r)));
    return out;
}

double frobenius_norm(const DenseMatrix& m) {
    double acc = 0.0;
    for (const scalar& v : m.entries) acc += std::norm(v);
    return std::sqrt(acc);
}

std::vector<scalar> matvec(const DenseMatrix& m, const std::vector<scalar>& x) {
    std::vector<scalar> y(m.rows);
    for (std::size_t r = 0; r < m.rows; ++r) {
        scalar acc = 0.0;
        for (std::size_t c = 0; c < m.cols; ++c) acc += m.at(r, c) * x[c];
        y[r] = acc;
    }
    return y;
}

std::size_t linear_index(const MultiIndex& idx, const Shape& shape) {
    if (idx.size() != shape.size())
        throw std::invalid_argument("multi-index length does not match shape");
    std::size_t flat = 0;
    for (std::size_t k = 0; k < shape.size(); ++k) {
        if (idx[k] < 1 || idx[k] > shape[k])
            throw std::invalid_argument("multi-index component " + std::to_string(k + 1) +
                                        " out of range");
        flat = flat * shape[k] + (idx[k] - 1);
    }
    return flat;
}

DenseMatrix unfold_split(const Tensor& a, std::size_t lead_modes) {
    DenseMatrix m(shape_product(a.shape(), 0, lead_modes),
                  shape_product(a.shape(), lead_modes, a.order()));
    // Row-major flattening on both sides, so the entry order is unchanged.
    m.entries = a.entries();
    return m;
}

DenseMatrix unfold(const Tensor& a) { return unfold_split(a, a.row_modes()); }

Tensor fold(const DenseMatrix& m, const Shape& row_shape, const Shape& col_shape) {
    if (m.rows != shape_product(row_shape, 0, row_shape.size()) ||
        m.cols != shape_product(col_shape, 0, col_shape.size()))
        throw std::invalid_argument("fold: matrix dimensions do not match shape products");
    Shape shape = row_shape;
    shape.insert(shape.end(), col_shape.begin(), col_shape.end());
    return Tensor(std::move(shape), row_shape.size(), m.entries);
}

namespace kernels {

int max_threads() {
#ifdef _OPENMP
    int hw = omp_get_max_threads();
#else
    int hw = 1;
#endif
    if (const char* env = std::getenv("NR_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) return static_cast<int>(v < hw ? v : hw);
    }
    return hw;
}

namespace {

// Fixed k-order per output element keeps serial and parallel runs bit-identical.
inline void matmul_row_range(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c,
                             std::size_t r0, std::size_t r1) {
    for (std::size_t r = r0; r < r1; ++r) {
        const scalar* arow = &a.entries[r * a.cols];
        scalar* crow = &c.entries[r * c.cols];
        for (std::size_t k = 0; k < a.cols; ++k) {
            const scalar av = arow[k];
            if (av == scalar(0.0)) continue;
            const scalar* brow = &b.entries[k * b.cols];
            for (std::size_t j = 0; j < b.cols; ++j) crow[j] += av * brow[j];
        }
    }
}

}  // namespace

DenseMatrix matmul_serial(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matmul dimension mismatch");
    DenseMatrix c(a.rows, b.cols);
    matmul_row_range(a, b, c, 0, a.rows);
    return c;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matmul dimension mismatch");
    DenseMatrix c(a.rows, b.cols);
#ifdef _OPENMP
    const std::size_t work = a.rows * a.cols * b.cols;
    const int nt = max_threads();
    if (nt > 1 && work >= 1u << 16) {
#pragma omp parallel for schedule(static) num_threads(nt)
        for (long long r = 0; r < static_cast<long long>(a.rows); ++r)
            matmul_row_range(a, b, c, static_cast<std::size_t>(r),
                             static_cast<std::size_t>(r) + 1);
        return c;
    }
#endif
    matmul_row_range(a, b, c, 0, a.rows);
    return c;
}

}  // namespace kernels

}  // namespace tenrange
