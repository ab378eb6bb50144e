#pragma once

// Shared worked-example tensors with known spectra, norms, and inverses.

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "tenrange/tensor.hpp"

namespace fixtures {

using tenrange::scalar;
using tenrange::Shape;
using tenrange::Tensor;

using Slice = std::vector<std::vector<scalar>>;

inline const scalar I{0.0, 1.0};

// shape (rows, cols, nslices): entry (i, j, k) = slices[k](i, j)
inline Tensor tensor3(std::size_t rows, std::size_t cols, const std::vector<Slice>& slices,
                      std::size_t row_modes) {
    const std::size_t ns = slices.size();
    std::vector<scalar> entries(rows * cols * ns);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t k = 0; k < ns; ++k)
                entries[(i * cols + j) * ns + k] = slices[k][i][j];
    return Tensor({rows, cols, ns}, row_modes, std::move(entries));
}

// shape (rows, cols, s1, s2): entry (i, j, k1, k2) = slices.at({k1, k2})(i, j)
inline Tensor tensor4(std::size_t rows, std::size_t cols, std::size_t s1, std::size_t s2,
                      const std::map<std::pair<std::size_t, std::size_t>, Slice>& slices) {
    std::vector<scalar> entries(rows * cols * s1 * s2, scalar(0.0));
    for (const auto& [key, mat] : slices) {
        const auto [k1, k2] = key;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                entries[((i * cols + j) * s1 + (k1 - 1)) * s2 + (k2 - 1)] = mat[i][j];
    }
    return Tensor({rows, cols, s1, s2}, 2, std::move(entries));
}

// 2x3x3 and 3x3x2 integer tensors whose two Einstein products are known exactly:
// the *_2 product is [[44, 64], [62, 5]].
inline Tensor contraction_lhs() {
    return tensor3(2, 3,
                   {{{4, -5, 4}, {1, 3, 1}}, {{6, 3, 1}, {2, 4, 7}}, {{3, 2, 3}, {2, 1, 3}}}, 1);
}

inline Tensor contraction_rhs() {
    return tensor3(3, 3,
                   {{{1, 1, 4}, {2, 4, 3}, {2, 3, 1}}, {{4, 3, 1}, {-4, 0, 2}, {0, 0, 1}}}, 1);
}

// (3,2)x(3,2) real tensor unfolding to diag(2, 1, 3, -1, 8, 9).
inline Tensor diag6_real() {
    return tensor4(3, 2, 3, 2,
                   {{{1, 1}, {{2, 0}, {0, 0}, {0, 0}}},
                    {{1, 2}, {{0, 1}, {0, 0}, {0, 0}}},
                    {{2, 1}, {{0, 0}, {3, 0}, {0, 0}}},
                    {{2, 2}, {{0, 0}, {0, -1}, {0, 0}}},
                    {{3, 1}, {{0, 0}, {0, 0}, {8, 0}}},
                    {{3, 2}, {{0, 0}, {0, 0}, {0, 9}}}});
}

// (3,2)x(3,2) real tensor with spectrum {-1, 3, 3, 0, 0, 0}.
inline Tensor range_example_a() {
    return tensor4(3, 2, 3, 2,
                   {{{1, 1}, {{0, 1}, {2, 1}, {2, 1}}},
                    {{1, 2}, {{0, 1}, {1, 1}, {1, 1}}},
                    {{2, 1}, {{1, 1}, {1, 2}, {1, 2}}},
                    {{2, 2}, {{0, 1}, {-1, 1}, {-1, 1}}},
                    {{3, 1}, {{1, 1}, {1, 1}, {1, 1}}},
                    {{3, 2}, {{0, 1}, {0, 1}, {0, 1}}}});
}

// (2,2)x(2,2) complex tensor with a four-lobed numerical range.
inline Tensor range_example_b() {
    return tensor4(2, 2, 2, 2,
                   {{{1, 1}, {{0, 0}, {1.0 + I, 0}}},
                    {{2, 1}, {{1.0 - I, 1.0 - I}, {0, 0}}},
                    {{1, 2}, {{0, 0}, {1.0 - I, 1.0 - I}}},
                    {{2, 2}, {{0, 1.0 + I}, {0, 0}}}});
}

// (2,2)x(2,2) complex tensor whose eigenvalues sit on the boundary.
inline Tensor range_example_c() {
    return tensor4(2, 2, 2, 2,
                   {{{1, 1}, {{I, 0}, {0, 0}}},
                    {{2, 1}, {{0, 0}, {1, 0}}},
                    {{1, 2}, {{0, 1.0 + I}, {0, 0}}},
                    {{2, 2}, {{0, 0}, {0, 2.0 + I}}}});
}

// Hermitian (2,2)x(2,2) complex tensor; its range is a real segment.
inline Tensor range_example_d() {
    return tensor4(2, 2, 2, 2,
                   {{{1, 1}, {{1, -3.0 * I}, {-I, 2.0 - 5.0 * I}}},
                    {{2, 1}, {{I, 1.0 - I}, {1, 3.0 + I}}},
                    {{1, 2}, {{3.0 * I, 4}, {1.0 + I, 7.0 + I}}},
                    {{2, 2}, {{2.0 + 5.0 * I, 7.0 - I}, {3.0 - I, 0}}}});
}

// Rank-one (3,2)x(3,2) tensor whose unfolding has an all-ones first row;
// spectrum {0, 1}, pseudoinverse spectrum {0, 1/6}.
inline Tensor ones_row() {
    std::map<std::pair<std::size_t, std::size_t>, Slice> slices;
    for (std::size_t k1 = 1; k1 <= 3; ++k1)
        for (std::size_t k2 = 1; k2 <= 2; ++k2)
            slices[{k1, k2}] = {{1, 0}, {0, 0}, {0, 0}};
    return tensor4(3, 2, 3, 2, slices);
}

// (3,2)x(3,2) tensor unfolding to diag(1+i, 4, i, 5+i, 3+i, 6+i); singular
// values {sqrt(37), sqrt(26), 4, sqrt(10), sqrt(2), 1}.
inline Tensor diag6_complex() {
    return tensor4(3, 2, 3, 2,
                   {{{1, 1}, {{1.0 + I, 0}, {0, 0}, {0, 0}}},
                    {{2, 1}, {{0, 0}, {I, 0}, {0, 0}}},
                    {{3, 1}, {{0, 0}, {0, 0}, {3.0 + I, 0}}},
                    {{1, 2}, {{0, 4}, {0, 0}, {0, 0}}},
                    {{2, 2}, {{0, 0}, {0, 5.0 + I}, {0, 0}}},
                    {{3, 2}, {{0, 0}, {0, 0}, {0, 6.0 + I}}}});
}

// (2,2)x(2,2) real tensor with spectral norm 19.9331 and numerical radius 18.9853.
inline Tensor radius_example() {
    return tensor4(2, 2, 2, 2,
                   {{{1, 1}, {{2, 5}, {-5, 0}}},
                    {{2, 1}, {{7, 9}, {5, 7}}},
                    {{1, 2}, {{0, 11}, {4, 8}}},
                    {{2, 2}, {{1, -1}, {9, 2}}}});
}

}  // namespace fixtures
