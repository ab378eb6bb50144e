#include "tenrange/numrange.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "tenrange/dense.hpp"
#include "tenrange/errors.hpp"
#include "tenrange/solvers.hpp"

namespace tenrange::numrange {

namespace {

void require_square(const Tensor& a, const char* what) {
    if (!a.is_square())
        throw std::invalid_argument(std::string(what) + " requires an even-order square tensor");
}

struct AngleSample {
    double support = 0;
    std::vector<scalar> maximizer;
    scalar point;
};

// One support-function evaluation: rotate, take the Hermitian part, extract
// the top eigenpair, then evaluate the sampled point through the original
// (unrotated) matrix.
AngleSample sample_at(const DenseMatrix& m, double theta) {
    const scalar rot = std::polar(1.0, theta);
    DenseMatrix h(m.rows, m.cols);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c)
            h.at(r, c) = 0.5 * (rot * m.at(r, c) + std::conj(rot * m.at(c, r)));
    solvers::HermitianEig eig = solvers::eigh_jacobi(std::move(h));

    AngleSample out;
    out.support = eig.values[0];
    out.maximizer.resize(m.rows);
    for (std::size_t r = 0; r < m.rows; ++r) out.maximizer[r] = eig.vectors.at(r, 0);
    std::vector<scalar> mx = matvec(m, out.maximizer);
    scalar z = 0;
    for (std::size_t r = 0; r < m.rows; ++r) z += std::conj(out.maximizer[r]) * mx[r];
    out.point = z;
    return out;
}

// All support values on the uniform grid; parallel with per-thread error capture.
std::vector<AngleSample> sample_grid(const DenseMatrix& m, std::size_t n_theta, bool parallel) {
    std::vector<AngleSample> samples(n_theta);
    bool failed = false;
    double failed_theta = 0;
    std::string message;

#ifdef _OPENMP
    const int nt = parallel ? kernels::max_threads() : 1;
#pragma omp parallel for schedule(static) num_threads(nt)
    for (long long k = 0; k < static_cast<long long>(n_theta); ++k) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_theta);
        try {
            samples[static_cast<std::size_t>(k)] = sample_at(m, theta);
        } catch (const std::exception& e) {
#pragma omp critical
            {
                if (!failed) {
                    failed = true;
                    failed_theta = theta;
                    message = e.what();
                }
            }
        }
    }
#else
    (void)parallel;
    for (std::size_t k = 0; k < n_theta; ++k) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_theta);
        try {
            samples[k] = sample_at(m, theta);
        } catch (const std::exception& e) {
            failed = true;
            failed_theta = theta;
            message = e.what();
            break;
        }
    }
#endif
    if (failed)
        throw numerical_error("boundary sampling failed at theta = " +
                              std::to_string(failed_theta) + ": " + message);
    return samples;
}

Boundary assemble(const Tensor& a, std::size_t n_theta, bool parallel) {
    require_square(a, "boundary");
    if (n_theta < 3) throw std::invalid_argument("boundary requires n_theta >= 3");
    const DenseMatrix m = unfold(a);
    std::vector<AngleSample> raw = sample_grid(m, n_theta, parallel);

    Boundary b;
    b.source_norm = spectral::spectral_norm(a);
    b.samples.resize(n_theta);
    for (std::size_t k = 0; k < n_theta; ++k) {
        b.samples[k].theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_theta);
        b.samples[k].support = raw[k].support;
        b.samples[k].point = raw[k].point;
    }
    return b;
}

}  // namespace

scalar rayleigh(const Tensor& a, const Tensor& x) {
    require_square(a, "rayleigh");
    const double nx = frobenius_norm(x);
    if (nx == 0.0) throw std::invalid_argument("rayleigh requires a nonzero tensor");
    Tensor ax = einstein_product(a, x, a.col_modes());
    return inner_product(ax, x) / (nx * nx);
}

SupportPoint support_function(const Tensor& a, double theta) {
    require_square(a, "support_function");
    const DenseMatrix m = unfold(a);
    AngleSample s = sample_at(m, theta);
    return SupportPoint{s.support, Tensor(a.row_shape(), a.row_modes(), s.maximizer)};
}

Boundary boundary(const Tensor& a, std::size_t n_theta) { return assemble(a, n_theta, true); }

Boundary boundary_serial(const Tensor& a, std::size_t n_theta) {
    return assemble(a, n_theta, false);
}

double numerical_radius(const Tensor& a, std::size_t n_theta) {
    require_square(a, "numerical_radius");
    if (n_theta < 3) throw std::invalid_argument("numerical_radius requires n_theta >= 3");
    const DenseMatrix m = unfold(a);
    std::vector<AngleSample> raw = sample_grid(m, n_theta, true);
    double w = raw[0].support;
    for (const AngleSample& s : raw) w = std::max(w, s.support);
    return w;
}

double numerical_radius(const Boundary& b) {
    double w = b.samples.empty() ? 0.0 : b.samples[0].support;
    for (const BoundarySample& s : b.samples) w = std::max(w, s.support);
    return w;
}

double membership_tolerance(const Tensor& a) {
    return 1e-6 * (1.0 + spectral::spectral_norm(a));
}

double membership_tolerance(const Boundary& b) { return 1e-6 * (1.0 + b.source_norm); }

Membership classify_point(const Boundary& b, scalar z, double tol) {
    double min_margin = std::numeric_limits<double>::infinity();
    for (const BoundarySample& s : b.samples) {
        const double margin =
            s.support - (std::cos(s.theta) * z.real() - std::sin(s.theta) * z.imag());
        min_margin = std::min(min_margin, margin);
    }
    if (min_margin < -tol) return Membership::outside;
    if (min_margin <= tol) return Membership::boundary;
    return Membership::inside;
}

bool contains_point(const Boundary& b, scalar z, double tol) {
    return classify_point(b, z, tol) != Membership::outside;
}

bool contains_point(const Tensor& a, scalar z, std::size_t n_theta, double tol) {
    return contains_point(boundary(a, n_theta), z, tol);
}

bool convexity_certificate(const Boundary& b, double slack) {
    const double allowed = slack * (1.0 + b.source_norm);
    for (const BoundarySample& p : b.samples) {
        for (const BoundarySample& s : b.samples) {
            const double re_rot =
                std::cos(s.theta) * p.point.real() - std::sin(s.theta) * p.point.imag();
            if (re_rot > s.support + allowed) return false;
        }
    }
    return true;
}

bool classify_unitary(const Tensor& a, std::size_t n_theta, double tol) {
    require_square(a, "classify_unitary");
    Tensor inv = spectral::inverse(a);  // singular input propagates as numerical_error
    if (numerical_radius(a, n_theta) > 1.0 + tol) return false;
    return numerical_radius(inv, n_theta) <= 1.0 + tol;
}

}  // namespace tenrange::numrange
