#pragma once

#include <cstddef>
#include <vector>

#include "tenrange/spectral.hpp"
#include "tenrange/tensor.hpp"

namespace tenrange::numrange {

/// One support sample of the numerical range W(a) at angle theta:
/// support = lambda_max(H(e^{i theta} a)) and point = <a*X, X> for the
/// maximizing unit eigentensor X.
struct BoundarySample {
    double theta = 0;
    double support = 0;
    scalar point;
};

/// Support samples ordered by theta plus the spectral norm of the source,
/// cached for tolerance scaling.
struct Boundary {
    std::vector<BoundarySample> samples;
    double source_norm = 0;
};

enum class Membership { inside, boundary, outside };

// <a*x, x> / ||x||^2; requires nonzero x.
scalar rayleigh(const Tensor& a, const Tensor& x);

struct SupportPoint {
    double support;
    Tensor maximizer;
};

SupportPoint support_function(const Tensor& a, double theta);

// Samples the boundary at theta_k = 2 pi k / n_theta (n_theta >= 3); angles
// are processed in parallel, the result is ordered by theta and identical to
// the serial reference.
Boundary boundary(const Tensor& a, std::size_t n_theta);
// Serial reference for the sampling loop above.
Boundary boundary_serial(const Tensor& a, std::size_t n_theta);

// Max support value over the grid. Computed from support values rather than
// sampled points: a tie in lambda_max can park the point on a chord interior.
double numerical_radius(const Tensor& a, std::size_t n_theta = 500);
double numerical_radius(const Boundary& b);

// Default membership tolerance 1e-6 * (1 + spectral norm).
double membership_tolerance(const Tensor& a);
double membership_tolerance(const Boundary& b);

// Sampled certificate against every supporting half-plane. Points within tol
// of some support line classify as `boundary`, distinct from inside/outside.
Membership classify_point(const Boundary& b, scalar z, double tol);
bool contains_point(const Boundary& b, scalar z, double tol);
bool contains_point(const Tensor& a, scalar z, std::size_t n_theta, double tol);

// Every sample point lies inside every other sample's half-plane, up to slack.
bool convexity_certificate(const Boundary& b, double slack = 1e-6);

// True iff w(a) <= 1 + tol and w(a^{-1}) <= 1 + tol; equivalent to unitarity.
// Requires invertible a.
bool classify_unitary(const Tensor& a, std::size_t n_theta = 500, double tol = 1e-6);

}  // namespace tenrange::numrange
