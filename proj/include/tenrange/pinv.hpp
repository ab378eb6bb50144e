#pragma once

#include <utility>
#include <vector>

#include "tenrange/tensor.hpp"

namespace tenrange::pinv {

/// Frobenius norms of the defects of the four Penrose equations for a
/// candidate inverse x of a.
struct PenroseResiduals {
    double r1 = 0;  // ||a*x*a - a||
    double r2 = 0;  // ||x*a*x - x||
    double r3 = 0;  // ||(a*x)^H - a*x||
    double r4 = 0;  // ||(x*a)^H - x*a||

    double max() const;
};

// Moore-Penrose inverse by SVD truncation at the shared rank tolerance.
Tensor moore_penrose(const Tensor& a);

PenroseResiduals penrose_residuals(const Tensor& a, const Tensor& x);

// ||a*a+ - a+*a|| <= tol * (1 + ||a||_F^2)
bool is_ep(const Tensor& a, double tol = 1e-10);

// a = sum outer(u_i, v_i) and its closed-form pseudoinverse
// sum outer(v_i, u_i), for orthonormal input lists of equal length.
std::pair<Tensor, Tensor> orthonormal_sum(const std::vector<Tensor>& u_list,
                                          const std::vector<Tensor>& v_list);

struct StructureFlags {
    bool hermitian = false;
    bool normal = false;
    bool unitary = false;
};

StructureFlags classify_structure(const Tensor& a, double tol = 1e-10);

}  // namespace tenrange::pinv
