#include "tenrange/spectral.hpp"

#include <cmath>

#include "tenrange/dense.hpp"
#include "tenrange/errors.hpp"
#include "tenrange/solvers.hpp"

namespace tenrange::spectral {

namespace {

void require_square(const Tensor& a, const char* what) {
    if (!a.is_square())
        throw std::invalid_argument(std::string(what) + " requires an even-order square tensor");
}

Tensor fold_vector(const std::vector<scalar>& x, const Shape& shape) {
    return Tensor(shape, shape.size(), x);
}

DenseMatrix diagonal_matrix(const std::vector<double>& d, std::size_t rows, std::size_t cols) {
    DenseMatrix m(rows, cols);
    for (std::size_t k = 0; k < d.size() && k < rows && k < cols; ++k) m.at(k, k) = d[k];
    return m;
}

}  // namespace

Spectrum eigenvalues(const Tensor& a, bool want_vectors) {
    require_square(a, "eigenvalues");
    DenseMatrix m = unfold(a);
    Spectrum out;
    out.values = solvers::eigenvalues_qr(m);
    if (want_vectors) {
        std::vector<Tensor> vecs;
        vecs.reserve(out.values.size());
        const Shape half = a.row_shape();
        for (std::size_t k = 0; k < out.values.size(); ++k) {
            std::vector<scalar> x = solvers::eigenvector_inverse_iteration(
                m, out.values[k], 0x9e3779b97f4a7c15ULL + k);
            vecs.push_back(fold_vector(x, half));
        }
        out.eigentensors = std::move(vecs);
    }
    return out;
}

Spectrum hermitian_eigensystem(const Tensor& a) {
    require_square(a, "hermitian_eigensystem");
    if (!is_hermitian(a)) throw std::invalid_argument("hermitian_eigensystem: input is not Hermitian");
    solvers::HermitianEig he = solvers::eigh_jacobi(unfold(a));
    Spectrum out;
    out.values.reserve(he.values.size());
    for (double v : he.values) out.values.emplace_back(v, 0.0);
    std::vector<Tensor> vecs;
    const Shape half = a.row_shape();
    const std::size_t n = he.vectors.rows;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<scalar> col(n);
        for (std::size_t r = 0; r < n; ++r) col[r] = he.vectors.at(r, c);
        vecs.push_back(fold_vector(col, half));
    }
    out.eigentensors = std::move(vecs);
    return out;
}

double spectral_radius(const Tensor& a) {
    double rho = 0;
    for (const scalar& v : eigenvalues(a).values) rho = std::max(rho, std::abs(v));
    return rho;
}

scalar determinant(const Tensor& a) {
    require_square(a, "determinant");
    return solvers::determinant(unfold(a));
}

SvdFactors svd(const Tensor& a) {
    DenseMatrix m = unfold(a);
    solvers::MatrixSvd ms = solvers::svd_jacobi(m);
    const Shape rs = a.row_shape(), cs = a.col_shape();
    return SvdFactors{fold(ms.u, rs, rs), std::move(ms.sigma), fold(ms.v, cs, cs)};
}

std::vector<double> singular_values(const Tensor& a) {
    return solvers::svd_jacobi(unfold(a)).sigma;
}

double spectral_norm(const Tensor& a) {
    std::vector<double> s = singular_values(a);
    return s.empty() ? 0.0 : s[0];
}

Tensor inverse(const Tensor& a) {
    require_square(a, "inverse");
    DenseMatrix m = unfold(a);
    solvers::MatrixSvd ms = solvers::svd_jacobi(m);
    const double tol = solvers::rank_tolerance(ms, m.rows, m.cols);
    if (ms.sigma.empty() || ms.sigma.back() <= tol)
        throw numerical_error("inverse: tensor is singular to the rank tolerance");
    return fold(solvers::inverse_lu(m), a.col_shape(), a.row_shape());
}

PolarFactors polar_decompose(const Tensor& a) {
    require_square(a, "polar_decompose");
    DenseMatrix m = unfold(a);
    solvers::MatrixSvd ms = solvers::svd_jacobi(m);
    const double tol = solvers::rank_tolerance(ms, m.rows, m.cols);
    if (ms.sigma.empty() || ms.sigma.back() <= tol)
        throw numerical_error("polar_decompose: tensor is singular to the rank tolerance");
    DenseMatrix u = kernels::matmul(ms.u, conj_transpose(ms.v));
    DenseMatrix sigma = diagonal_matrix(ms.sigma, m.cols, m.cols);
    DenseMatrix p = kernels::matmul(ms.v, kernels::matmul(sigma, conj_transpose(ms.v)));
    const Shape rs = a.row_shape();
    return PolarFactors{fold(u, rs, rs), fold(p, rs, rs)};
}

}  // namespace tenrange::spectral
