#pragma once

#include <optional>
#include <vector>

#include "tenrange/tensor.hpp"

namespace tenrange::spectral {

/// Eigenvalue multiset of an even-order square tensor, with optional
/// unit-norm eigentensors in matching order.
struct Spectrum {
    std::vector<scalar> values;
    std::optional<std::vector<Tensor>> eigentensors;
};

/// Unitary factor tensors and nonincreasing singular values:
/// a = left * Sigma * right^H.
struct SvdFactors {
    Tensor left;
    std::vector<double> singular_values;
    Tensor right;
};

// Eigenvalues of unfold(a), sorted by (Re, Im); folded unit eigentensors on
// request. Requires an even-order square tensor.
Spectrum eigenvalues(const Tensor& a, bool want_vectors = false);

// Real eigenvalues in nonincreasing order with orthonormal eigentensors.
// Requires a Hermitian input (to the structural tolerance).
Spectrum hermitian_eigensystem(const Tensor& a);

double spectral_radius(const Tensor& a);

scalar determinant(const Tensor& a);

SvdFactors svd(const Tensor& a);
std::vector<double> singular_values(const Tensor& a);
double spectral_norm(const Tensor& a);

// Inverse of an even-order square tensor; requires the smallest singular
// value to clear the rank tolerance.
Tensor inverse(const Tensor& a);

// a = unitary * positive with positive = (a^H * a)^{1/2}; requires invertible a.
struct PolarFactors {
    Tensor unitary;
    Tensor positive;
};

PolarFactors polar_decompose(const Tensor& a);

}  // namespace tenrange::spectral
