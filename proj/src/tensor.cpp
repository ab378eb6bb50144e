#include "tenrange/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tenrange/dense.hpp"

namespace tenrange {

std::size_t shape_product(const Shape& shape, std::size_t first, std::size_t last) {
    std::size_t p = 1;
    for (std::size_t k = first; k < last; ++k) p *= shape[k];
    return p;
}

Permutation::Permutation(std::vector<std::size_t> img) : image(std::move(img)) {
    std::vector<bool> seen(image.size(), false);
    for (std::size_t v : image) {
        if (v < 1 || v > image.size() || seen[v - 1])
            throw std::invalid_argument("permutation image is not a bijection on {1..M}");
        seen[v - 1] = true;
    }
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(image.size());
    for (std::size_t k = 0; k < image.size(); ++k) inv[image[k] - 1] = k + 1;
    return Permutation(std::move(inv));
}

Tensor::Tensor(Shape shape, std::size_t row_modes, std::vector<scalar> entries)
    : shape_(std::move(shape)), row_modes_(row_modes), entries_(std::move(entries)) {
    std::size_t total = 1;
    for (std::size_t e : shape_) {
        if (e == 0) throw std::invalid_argument("tensor mode extent must be positive");
        total *= e;
    }
    if (row_modes_ > shape_.size())
        throw std::invalid_argument("row_modes exceeds the number of modes");
    if (entries_.size() != total)
        throw std::invalid_argument("entry count " + std::to_string(entries_.size()) +
                                    " does not match shape product " + std::to_string(total));
    for (const scalar& v : entries_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("tensor entries must be finite");
}

Shape Tensor::row_shape() const { return Shape(shape_.begin(), shape_.begin() + row_modes_); }

Shape Tensor::col_shape() const { return Shape(shape_.begin() + row_modes_, shape_.end()); }

bool Tensor::is_square() const {
    if (shape_.size() != 2 * row_modes_) return false;
    for (std::size_t k = 0; k < row_modes_; ++k)
        if (shape_[k] != shape_[row_modes_ + k]) return false;
    return true;
}

scalar Tensor::at(const MultiIndex& idx) const { return entries_[linear_index(idx, shape_)]; }

Tensor build_tensor(Shape shape, std::size_t row_modes, std::vector<scalar> entries) {
    return Tensor(std::move(shape), row_modes, std::move(entries));
}

Tensor zeros(Shape shape, std::size_t row_modes) {
    std::size_t total = shape_product(shape, 0, shape.size());
    return Tensor(std::move(shape), row_modes, std::vector<scalar>(total));
}

Tensor identity(const Shape& half_shape) {
    Shape shape = half_shape;
    shape.insert(shape.end(), half_shape.begin(), half_shape.end());
    std::size_t n = shape_product(half_shape, 0, half_shape.size());
    std::vector<scalar> entries(n * n);
    for (std::size_t k = 0; k < n; ++k) entries[k * n + k] = 1.0;
    return Tensor(std::move(shape), half_shape.size(), std::move(entries));
}

Tensor einstein_product(const Tensor& a, const Tensor& b, std::size_t n) {
    if (n == 0 || n > a.order() || n > b.order())
        throw std::invalid_argument("contraction mode count out of range");
    const std::size_t lead = a.order() - n;
    for (std::size_t k = 0; k < n; ++k)
        if (a.extent(lead + k) != b.extent(k))
            throw std::invalid_argument("mode-extent mismatch on the contracted block");

    DenseMatrix ma = unfold_split(a, lead);
    DenseMatrix mb = unfold_split(b, n);
    DenseMatrix mc = kernels::matmul(ma, mb);

    Shape row_shape(a.shape().begin(), a.shape().begin() + lead);
    Shape col_shape(b.shape().begin() + n, b.shape().end());
    return fold(mc, row_shape, col_shape);
}

Tensor pi_transpose(const Tensor& a, const Permutation& pi) {
    if (pi.size() != a.order())
        throw std::invalid_argument("permutation length does not match mode count");
    const std::size_t m = a.order();
    Shape out_shape(m);
    for (std::size_t k = 0; k < m; ++k) out_shape[k] = a.extent(pi.image[k] - 1);

    std::vector<scalar> out(a.size());
    MultiIndex idx(m, 1), dst(m);
    for (std::size_t flat = 0; flat < a.size(); ++flat) {
        for (std::size_t k = 0; k < m; ++k) dst[k] = idx[pi.image[k] - 1];
        out[linear_index(dst, out_shape)] = a[flat];
        for (std::size_t k = m; k-- > 0;) {
            if (idx[k] < a.extent(k)) {
                ++idx[k];
                break;
            }
            idx[k] = 1;
        }
    }
    return Tensor(std::move(out_shape), a.row_modes(), std::move(out));
}

Tensor transpose(const Tensor& a) {
    const std::size_t m = a.row_modes(), l = a.col_modes();
    std::vector<std::size_t> image(m + l);
    for (std::size_t k = 0; k < l; ++k) image[k] = m + k + 1;
    for (std::size_t k = 0; k < m; ++k) image[l + k] = k + 1;
    Tensor t = pi_transpose(a, Permutation(std::move(image)));
    return Tensor(t.shape(), l, t.entries());
}

Tensor conjugate(const Tensor& a) {
    std::vector<scalar> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::conj(a[k]);
    return Tensor(a.shape(), a.row_modes(), std::move(out));
}

Tensor conj_transpose(const Tensor& a) { return conjugate(transpose(a)); }

scalar inner_product(const Tensor& x, const Tensor& y) {
    if (x.shape() != y.shape()) throw std::invalid_argument("inner product shape mismatch");
    scalar acc = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) acc += std::conj(y[k]) * x[k];
    return acc;
}

double frobenius_norm(const Tensor& x) {
    double acc = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) acc += std::norm(x[k]);
    return std::sqrt(acc);
}

Tensor linear_combine(scalar alpha, const Tensor& a, scalar beta, const Tensor& b) {
    if (a.shape() != b.shape() || a.row_modes() != b.row_modes())
        throw std::invalid_argument("linear_combine shape or partition mismatch");
    std::vector<scalar> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = alpha * a[k] + beta * b[k];
    return Tensor(a.shape(), a.row_modes(), std::move(out));
}

Tensor scale(scalar alpha, const Tensor& a) {
    std::vector<scalar> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = alpha * a[k];
    return Tensor(a.shape(), a.row_modes(), std::move(out));
}

Tensor hermitian_part(const Tensor& a) {
    if (!a.is_square()) throw std::invalid_argument("hermitian_part requires a square partition");
    return linear_combine(0.5, a, 0.5, conj_transpose(a));
}

Tensor skew_hermitian_part(const Tensor& a) {
    if (!a.is_square())
        throw std::invalid_argument("skew_hermitian_part requires a square partition");
    return linear_combine(0.5, a, -0.5, conj_transpose(a));
}

Tensor outer_product(const Tensor& u, const Tensor& v) {
    if (u.shape() != v.shape()) throw std::invalid_argument("outer product shape mismatch");
    Shape shape = u.shape();
    shape.insert(shape.end(), v.shape().begin(), v.shape().end());
    std::vector<scalar> out(u.size() * v.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i * v.size() + j] = u[i] * std::conj(v[j]);
    return Tensor(std::move(shape), u.order(), std::move(out));
}

Tensor direct_sum(const Tensor& a, const Tensor& b) {
    if (!a.is_square() || !b.is_square() || a.order() != b.order() || a.order() == 0)
        throw std::invalid_argument("direct_sum requires square tensors of equal order");
    const std::size_t half = a.row_modes();
    // Blocks concatenate along the leading row/column mode; the remaining
    // extents must agree so the unfolding is exactly diag(unfold(a), unfold(b)).
    for (std::size_t k = 1; k < half; ++k)
        if (a.extent(k) != b.extent(k))
            throw std::invalid_argument("direct_sum blocks must agree on trailing extents");
    Shape row_shape = a.row_shape();
    row_shape[0] = a.extent(0) + b.extent(0);

    DenseMatrix ma = unfold(a), mb = unfold(b);
    DenseMatrix m(ma.rows + mb.rows, ma.cols + mb.cols);
    for (std::size_t r = 0; r < ma.rows; ++r)
        for (std::size_t c = 0; c < ma.cols; ++c) m.at(r, c) = ma.at(r, c);
    for (std::size_t r = 0; r < mb.rows; ++r)
        for (std::size_t c = 0; c < mb.cols; ++c) m.at(ma.rows + r, ma.cols + c) = mb.at(r, c);
    return fold(m, row_shape, row_shape);
}

bool is_hermitian(const Tensor& a, double tol) {
    if (!a.is_square()) return false;
    Tensor defect = linear_combine(1.0, a, -1.0, conj_transpose(a));
    return frobenius_norm(defect) <= tol * (1.0 + frobenius_norm(a));
}

namespace reference {

Tensor einstein_product(const Tensor& a, const Tensor& b, std::size_t n) {
    if (n == 0 || n > a.order() || n > b.order())
        throw std::invalid_argument("contraction mode count out of range");
    const std::size_t lead = a.order() - n;
    const std::size_t trail = b.order() - n;
    for (std::size_t k = 0; k < n; ++k)
        if (a.extent(lead + k) != b.extent(k))
            throw std::invalid_argument("mode-extent mismatch on the contracted block");

    Shape out_shape;
    for (std::size_t k = 0; k < lead; ++k) out_shape.push_back(a.extent(k));
    for (std::size_t k = n; k < b.order(); ++k) out_shape.push_back(b.extent(k));

    Shape kshape(a.shape().begin() + lead, a.shape().end());
    std::vector<scalar> out(shape_product(out_shape, 0, out_shape.size()));

    MultiIndex ai(a.order(), 1), bi(b.order(), 1);
    auto advance = [](MultiIndex& idx, const Shape& shape) {
        for (std::size_t k = shape.size(); k-- > 0;) {
            if (idx[k] < shape[k]) {
                ++idx[k];
                return true;
            }
            idx[k] = 1;
        }
        return false;
    };

    MultiIndex lead_idx(lead, 1), trail_idx(trail, 1);
    Shape lead_shape(a.shape().begin(), a.shape().begin() + lead);
    Shape trail_shape(b.shape().begin() + n, b.shape().end());
    std::size_t flat = 0;
    do {
        trail_idx.assign(trail, 1);
        do {
            scalar acc = 0.0;
            MultiIndex k_idx(n, 1);
            do {
                for (std::size_t k = 0; k < lead; ++k) ai[k] = lead_idx[k];
                for (std::size_t k = 0; k < n; ++k) ai[lead + k] = k_idx[k];
                for (std::size_t k = 0; k < n; ++k) bi[k] = k_idx[k];
                for (std::size_t k = 0; k < trail; ++k) bi[n + k] = trail_idx[k];
                acc += a.at(ai) * b.at(bi);
            } while (advance(k_idx, kshape));
            out[flat++] = acc;
        } while (trail > 0 && advance(trail_idx, trail_shape));
    } while (lead > 0 && advance(lead_idx, lead_shape));

    return Tensor(std::move(out_shape), lead, std::move(out));
}

}  // namespace reference

}  // namespace tenrange
