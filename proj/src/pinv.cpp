#include "tenrange/pinv.hpp"

#include <algorithm>
#include <cmath>

#include "tenrange/dense.hpp"
#include "tenrange/errors.hpp"
#include "tenrange/solvers.hpp"

namespace tenrange::pinv {

double PenroseResiduals::max() const { return std::max({r1, r2, r3, r4}); }

Tensor moore_penrose(const Tensor& a) {
    DenseMatrix m = unfold(a);
    solvers::MatrixSvd ms = solvers::svd_jacobi(m);
    const double cutoff = solvers::rank_tolerance(ms, m.rows, m.cols);

    // x = v * diag(1/sigma over the kept range) * u^H
    const std::size_t kmin = std::min(m.rows, m.cols);
    DenseMatrix sig_pinv(m.cols, m.rows);
    for (std::size_t k = 0; k < kmin && k < ms.sigma.size(); ++k)
        if (ms.sigma[k] > cutoff) sig_pinv.at(k, k) = 1.0 / ms.sigma[k];
    DenseMatrix x = kernels::matmul(ms.v, kernels::matmul(sig_pinv, conj_transpose(ms.u)));
    return fold(x, a.col_shape(), a.row_shape());
}

PenroseResiduals penrose_residuals(const Tensor& a, const Tensor& x) {
    if (x.row_shape() != a.col_shape() || x.col_shape() != a.row_shape())
        throw std::invalid_argument("penrose_residuals: candidate shape does not match");
    const std::size_t na = a.col_modes();  // contraction count for a * x
    const std::size_t nx = x.col_modes();  // contraction count for x * a

    Tensor ax = einstein_product(a, x, na);
    Tensor xa = einstein_product(x, a, nx);
    Tensor axa = einstein_product(ax, a, a.row_modes());
    Tensor xax = einstein_product(xa, x, x.row_modes());

    PenroseResiduals r;
    r.r1 = frobenius_norm(linear_combine(1.0, axa, -1.0, a));
    r.r2 = frobenius_norm(linear_combine(1.0, xax, -1.0, x));
    r.r3 = frobenius_norm(linear_combine(1.0, conj_transpose(ax), -1.0, ax));
    r.r4 = frobenius_norm(linear_combine(1.0, conj_transpose(xa), -1.0, xa));
    return r;
}

bool is_ep(const Tensor& a, double tol) {
    if (!a.is_square()) throw std::invalid_argument("is_ep requires an even-order square tensor");
    Tensor x = moore_penrose(a);
    const std::size_t n = a.row_modes();
    Tensor defect =
        linear_combine(1.0, einstein_product(a, x, n), -1.0, einstein_product(x, a, n));
    const double na = frobenius_norm(a);
    return frobenius_norm(defect) <= tol * (1.0 + na * na);
}

namespace {

void require_orthonormal(const std::vector<Tensor>& list, const char* which) {
    for (std::size_t i = 0; i < list.size(); ++i) {
        for (std::size_t j = i; j < list.size(); ++j) {
            const scalar g = inner_product(list[i], list[j]);
            const double expect = (i == j) ? 1.0 : 0.0;
            if (std::abs(g - expect) > 1e-10)
                throw std::invalid_argument(std::string("orthonormal_sum: ") + which +
                                            " list fails the Gram test");
        }
    }
}

}  // namespace

std::pair<Tensor, Tensor> orthonormal_sum(const std::vector<Tensor>& u_list,
                                          const std::vector<Tensor>& v_list) {
    if (u_list.empty() || u_list.size() != v_list.size())
        throw std::invalid_argument("orthonormal_sum: lists must be nonempty and equal length");
    for (const Tensor& t : u_list)
        if (t.shape() != u_list[0].shape())
            throw std::invalid_argument("orthonormal_sum: mixed shapes in the first list");
    for (const Tensor& t : v_list)
        if (t.shape() != u_list[0].shape())
            throw std::invalid_argument("orthonormal_sum: mixed shapes in the second list");
    require_orthonormal(u_list, "first");
    require_orthonormal(v_list, "second");

    Tensor a = outer_product(u_list[0], v_list[0]);
    Tensor apinv = outer_product(v_list[0], u_list[0]);
    for (std::size_t k = 1; k < u_list.size(); ++k) {
        a = linear_combine(1.0, a, 1.0, outer_product(u_list[k], v_list[k]));
        apinv = linear_combine(1.0, apinv, 1.0, outer_product(v_list[k], u_list[k]));
    }
    return {std::move(a), std::move(apinv)};
}

StructureFlags classify_structure(const Tensor& a, double tol) {
    if (!a.is_square())
        throw std::invalid_argument("classify_structure requires an even-order square tensor");
    const std::size_t n = a.row_modes();
    StructureFlags flags;
    flags.hermitian = is_hermitian(a, tol);

    Tensor ah = conj_transpose(a);
    Tensor commutator =
        linear_combine(1.0, einstein_product(a, ah, n), -1.0, einstein_product(ah, a, n));
    const double na = frobenius_norm(a);
    flags.normal = frobenius_norm(commutator) <= tol * (1.0 + na * na);

    Tensor gram_defect =
        linear_combine(1.0, einstein_product(ah, a, n), -1.0, identity(a.row_shape()));
    flags.unitary = frobenius_norm(gram_defect) <= tol;
    return flags;
}

}  // namespace tenrange::pinv
