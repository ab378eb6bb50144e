#include "tenrange/checks.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <sstream>

#include "tenrange/dense.hpp"
#include "tenrange/generate.hpp"
#include "tenrange/numrange.hpp"
#include "tenrange/pinv.hpp"
#include "tenrange/solvers.hpp"
#include "tenrange/spectral.hpp"

namespace tenrange::checks {

namespace {

using generate::Rng;
using numrange::Boundary;

std::uint64_t subseed(std::uint64_t seed, std::uint64_t tag) {
    return (seed + 0x9e3779b97f4a7c15ULL * (tag + 1)) ^ (tag << 17);
}

Shape half_shape_for(std::size_t k) { return (k % 2 == 0) ? Shape{2, 2} : Shape{3, 2}; }

double max_entry_diff(const Tensor& a, const Tensor& b) {
    double m = 0;
    for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(3);
    ss << v;
    return ss.str();
}

// Greedy nearest matching of two eigenvalue multisets.
bool multisets_match(std::vector<scalar> x, std::vector<scalar> y, double tol) {
    if (x.size() != y.size()) return false;
    for (const scalar& v : x) {
        std::size_t best = y.size();
        double bestd = tol;
        for (std::size_t j = 0; j < y.size(); ++j) {
            const double d = std::abs(v - y[j]);
            if (d <= bestd) {
                bestd = d;
                best = j;
            }
        }
        if (best == y.size()) return false;
        y.erase(y.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return true;
}

std::size_t rank_of(const Tensor& a) {
    DenseMatrix m = unfold(a);
    solvers::MatrixSvd ms = solvers::svd_jacobi(m);
    const double tol = solvers::rank_tolerance(ms, m.rows, m.cols);
    std::size_t r = 0;
    for (double s : ms.sigma)
        if (s > tol) ++r;
    return r;
}

// Rank-one tensor whose unfolding has an all-ones first row; its
// pseudoinverse violates the reciprocal-eigenvalue law (1 maps to 1/6).
Tensor ones_row_counterexample() {
    DenseMatrix m(6, 6);
    for (std::size_t c = 0; c < 6; ++c) m.at(0, c) = 1.0;
    return fold(m, {3, 2}, {3, 2});
}

Tensor random_invertible(const Shape& half, Rng& rng, double sigma_min = 0.05) {
    for (int tries = 0; tries < 64; ++tries) {
        Tensor a = generate::random_square(half, rng);
        std::vector<double> s = spectral::singular_values(a);
        if (!s.empty() && s.back() > sigma_min) return a;
    }
    throw numerical_error("random_invertible: no well-conditioned draw found");
}

struct Battery {
    std::uint64_t seed;
    std::size_t instances;
    const std::optional<Tensor>& input;
    std::vector<CheckResult> results;

    bool input_square() const { return input && input->is_square() && input->order() > 0; }

    // Runs body over the random instances (and the input tensor first when it
    // is square); body returns an empty string on success.
    void square_property(const std::string& name,
                         const std::function<std::string(const Tensor&, std::size_t, Rng&)>& body) {
        CheckResult r{name, true, ""};
        Rng rng(subseed(seed, std::hash<std::string>{}(name)));
        try {
            if (input_square()) {
                std::string err = body(*input, static_cast<std::size_t>(-1), rng);
                if (!err.empty()) {
                    r.pass = false;
                    r.detail = "input tensor: " + err;
                }
            }
            for (std::size_t k = 0; r.pass && k < instances; ++k) {
                Tensor a = generate::random_square(half_shape_for(k), rng);
                std::string err = body(a, k, rng);
                if (!err.empty()) {
                    r.pass = false;
                    r.detail = "instance " + std::to_string(k) + ": " + err;
                }
            }
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }

    void property(const std::string& name, const std::function<std::string(Rng&)>& body) {
        CheckResult r{name, true, ""};
        Rng rng(subseed(seed, std::hash<std::string>{}(name)));
        try {
            std::string err = body(rng);
            if (!err.empty()) {
                r.pass = false;
                r.detail = err;
            }
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
};

std::string check_einstein_vs_reference(const Battery& b, Rng& rng) {
    const std::size_t reps = b.instances;
    for (std::size_t k = 0; k < reps; ++k) {
        Tensor a = generate::random_tensor({2, 3, 3}, 1, rng);
        Tensor t = generate::random_tensor({3, 3, 2}, 2, rng);
        for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
            Tensor fast = einstein_product(a, t, n);
            Tensor ref = reference::einstein_product(a, t, n);
            const double d = max_entry_diff(fast, ref);
            if (d > 1e-12)
                return "instance " + std::to_string(k) + ": contraction " + std::to_string(n) +
                       " differs by " + fmt(d);
        }
        // vector case: the second factor has exactly n modes
        Tensor x = generate::random_tensor({3, 3}, 2, rng);
        Tensor fast = einstein_product(a, x, 2);
        Tensor ref = reference::einstein_product(a, x, 2);
        if (max_entry_diff(fast, ref) > 1e-12)
            return "instance " + std::to_string(k) + ": vector contraction differs";
    }
    if (b.input_square()) {
        Tensor f = *b.input;
        Tensor fast = einstein_product(f, f, f.row_modes());
        Tensor ref = reference::einstein_product(f, f, f.row_modes());
        if (max_entry_diff(fast, ref) > 1e-12 * (1.0 + frobenius_norm(ref)))
            return "input tensor: kernel and reference disagree";
    }
    return "";
}

}  // namespace

std::vector<CheckResult> run_battery(const std::optional<Tensor>& input, std::uint64_t seed,
                                     std::size_t instances) {
    Battery b{seed, instances, input, {}};

    b.property("einstein product matches brute-force contraction",
               [&](Rng& rng) { return check_einstein_vs_reference(b, rng); });

    b.property("einstein product associativity", [&](Rng& rng) {
        for (std::size_t k = 0; k < b.instances; ++k) {
            Tensor a = generate::random_tensor({2, 3}, 1, rng);
            Tensor t = generate::random_tensor({3, 2, 2}, 1, rng);
            Tensor c = generate::random_tensor({2, 2, 3}, 2, rng);
            Tensor left = einstein_product(einstein_product(a, t, 1), c, 2);
            Tensor right = einstein_product(a, einstein_product(t, c, 2), 1);
            if (max_entry_diff(left, right) > 1e-12)
                return "instance " + std::to_string(k) + ": association gap";
        }
        return std::string{};
    });

    b.property("unfold is a product homomorphism and isometry", [&](Rng& rng) {
        for (std::size_t k = 0; k < b.instances; ++k) {
            Tensor a = generate::random_tensor({2, 3, 2, 2}, 2, rng);
            Tensor t = generate::random_tensor({2, 2, 3}, 2, rng);
            Tensor prod = einstein_product(a, t, 2);
            DenseMatrix direct = kernels::matmul(unfold(a), unfold(t));
            DenseMatrix folded = unfold(prod);
            double d = 0;
            for (std::size_t j = 0; j < direct.entries.size(); ++j)
                d = std::max(d, std::abs(direct.entries[j] - folded.entries[j]));
            if (d > 1e-12) return "instance " + std::to_string(k) + ": homomorphism gap " + fmt(d);
            if (frobenius_norm(a) != frobenius_norm(unfold(a)))
                return "instance " + std::to_string(k) + ": unfold changed the norm";
        }
        return std::string{};
    });

    b.property("pi-transpose inverse round trip", [&](Rng& rng) {
        for (std::size_t k = 0; k < b.instances; ++k) {
            Tensor a = generate::random_tensor({2, 3, 2}, 1, rng);
            Permutation pi({2, 3, 1});
            Tensor back = pi_transpose(pi_transpose(a, pi), pi.inverse());
            if (max_entry_diff(a, back) != 0.0)
                return "instance " + std::to_string(k) + ": round trip not exact";
        }
        return std::string{};
    });

    b.square_property("adjoint identity of the conjugate transpose",
                      [&](const Tensor& a, std::size_t, Rng& rng) {
                          Tensor x = generate::random_unit(a.row_shape(), rng);
                          Tensor y = generate::random_unit(a.row_shape(), rng);
                          const std::size_t n = a.row_modes();
                          scalar lhs = inner_product(einstein_product(a, x, n), y);
                          scalar rhs = inner_product(x, einstein_product(conj_transpose(a), y, n));
                          if (std::abs(lhs - rhs) > 1e-12 * (1.0 + frobenius_norm(a)))
                              return std::string("adjoint gap ") + fmt(std::abs(lhs - rhs));
                          if (inner_product(x, y) != std::conj(inner_product(y, x)))
                              return std::string("inner product is not conjugate symmetric");
                          const scalar xx = inner_product(x, x);
                          if (xx.imag() != 0.0 || xx.real() < 0.0)
                              return std::string("inner product norm is not real nonnegative");
                          return std::string{};
                      });

    b.square_property("hermitian plus skew-hermitian decomposition",
                      [&](const Tensor& a, std::size_t, Rng& rng) {
                          Tensor h = hermitian_part(a), s = skew_hermitian_part(a);
                          Tensor sum = linear_combine(1.0, h, 1.0, s);
                          if (max_entry_diff(sum, a) > 1e-15 * (1.0 + frobenius_norm(a)))
                              return std::string("decomposition does not recompose");
                          if (!is_hermitian(h)) return std::string("hermitian part failed the test");
                          Tensor x = generate::random_unit(a.row_shape(), rng);
                          const scalar rz = numrange::rayleigh(a, x);
                          const scalar hz = numrange::rayleigh(h, x);
                          if (std::abs(rz.real() - hz.real()) > 1e-12 * (1.0 + frobenius_norm(a)) ||
                              std::abs(hz.imag()) > 1e-12 * (1.0 + frobenius_norm(a)))
                              return std::string("hermitian part does not carry Re of the form");
                          return std::string{};
                      });

    b.property("outer product contraction identity", [&](Rng& rng) {
        for (std::size_t k = 0; k < b.instances; ++k) {
            const Shape half = half_shape_for(k);
            Tensor u = generate::random_unit(half, rng);
            Tensor v = generate::random_unit(half, rng);
            Tensor x = generate::random_tensor(half, half.size(), rng);
            Tensor p = outer_product(u, v);
            Tensor px = einstein_product(p, x, half.size());
            Tensor expect = scale(inner_product(x, v), u);
            if (max_entry_diff(px, expect) > 1e-12)
                return "instance " + std::to_string(k) + ": contraction identity gap";
            Tensor proj = outer_product(u, u);
            Tensor proj2 = einstein_product(proj, proj, half.size());
            if (max_entry_diff(proj2, proj) > 1e-12)
                return "instance " + std::to_string(k) + ": rank-one projector not idempotent";
        }
        return std::string{};
    });

    b.property("direct sum spectrum is the union", [&](Rng& rng) {
        for (std::size_t k = 0; k < std::min<std::size_t>(b.instances, 40); ++k) {
            Tensor a = generate::random_square({2, 2}, rng);
            Tensor t = generate::random_square({2, 2}, rng);
            std::vector<scalar> expect = spectral::eigenvalues(a).values;
            std::vector<scalar> more = spectral::eigenvalues(t).values;
            expect.insert(expect.end(), more.begin(), more.end());
            std::vector<scalar> got = spectral::eigenvalues(direct_sum(a, t)).values;
            if (!multisets_match(got, expect, 1e-10))
                return "instance " + std::to_string(k) + ": spectra differ";
        }
        return std::string{};
    });

    b.square_property("eigenpair residuals", [&](const Tensor& a, std::size_t, Rng&) {
        spectral::Spectrum s = spectral::eigenvalues(a, true);
        const double scale_a = frobenius_norm(a);
        for (std::size_t j = 0; j < s.values.size(); ++j) {
            const Tensor& x = (*s.eigentensors)[j];
            Tensor ax = einstein_product(a, x, a.row_modes());
            Tensor defect = linear_combine(1.0, ax, -s.values[j], x);
            if (frobenius_norm(defect) > 1e-8 * (1.0 + scale_a))
                return std::string("residual ") + fmt(frobenius_norm(defect));
        }
        return std::string{};
    });

    b.square_property("determinant multiplicativity and eigenvalue product",
                      [&](const Tensor& a, std::size_t, Rng& rng) {
                          Tensor t = generate::random_square(a.row_shape(), rng);
                          const scalar da = spectral::determinant(a);
                          const scalar dt = spectral::determinant(t);
                          const scalar dat =
                              spectral::determinant(einstein_product(a, t, a.row_modes()));
                          if (std::abs(dat - da * dt) > 1e-8 * (1.0 + std::abs(da * dt)))
                              return std::string("det(a*b) mismatch ") + fmt(std::abs(dat - da * dt));
                          scalar prod = 1.0;
                          for (const scalar& v : spectral::eigenvalues(a).values) prod *= v;
                          if (std::abs(da - prod) > 1e-8 * (1.0 + std::abs(da)))
                              return std::string("det vs eigenvalue product gap");
                          return std::string{};
                      });

    b.property("normal tensors: singular values are eigenvalue moduli", [&](Rng& rng) {
        for (std::size_t k = 0; k < b.instances; ++k) {
            std::vector<scalar> lam;
            Tensor a = generate::random_normal(half_shape_for(k), rng, &lam);
            std::vector<double> sv = spectral::singular_values(a);
            std::vector<double> mods(lam.size());
            for (std::size_t j = 0; j < lam.size(); ++j) mods[j] = std::abs(lam[j]);
            std::sort(mods.begin(), mods.end(), std::greater<double>());
            for (std::size_t j = 0; j < sv.size(); ++j)
                if (std::abs(sv[j] - mods[j]) > 1e-8)
                    return "instance " + std::to_string(k) + ": modulus gap";
        }
        return std::string{};
    });

    b.square_property("spectral norm squared equals radius of a^H a",
                      [&](const Tensor& a, std::size_t, Rng&) {
                          const double n2 = spectral::spectral_norm(a);
                          const double rho = spectral::spectral_radius(
                              einstein_product(conj_transpose(a), a, a.row_modes()));
                          if (std::abs(n2 * n2 - rho) > 1e-8 * (1.0 + rho))
                              return std::string("norm consistency gap");
                          return std::string{};
                      });

    b.property("hermitian and general solvers agree", [&](Rng& rng) {
        for (std::size_t k = 0; k < b.instances; ++k) {
            Tensor a = generate::random_hermitian(half_shape_for(k), rng);
            spectral::Spectrum hs = spectral::hermitian_eigensystem(a);
            std::vector<scalar> gen = spectral::eigenvalues(a).values;
            std::vector<scalar> herm = hs.values;
            if (!multisets_match(herm, gen, 1e-8 * (1.0 + frobenius_norm(a))))
                return "instance " + std::to_string(k) + ": spectra differ";
            const auto& vecs = *hs.eigentensors;
            for (std::size_t i = 0; i < vecs.size(); ++i)
                for (std::size_t j = i; j < vecs.size(); ++j) {
                    const scalar g = inner_product(vecs[i], vecs[j]);
                    if (std::abs(g - (i == j ? scalar(1.0) : scalar(0.0))) > 1e-10)
                        return "instance " + std::to_string(k) + ": eigentensor Gram defect";
                }
        }
        return std::string{};
    });

    b.property("svd factors are unitary and reconstruct", [&](Rng& rng) {
        for (std::size_t k = 0; k < b.instances; ++k) {
            Tensor a = (k % 3 == 2) ? generate::random_tensor({2, 3, 2, 2}, 2, rng)
                                    : generate::random_square(half_shape_for(k), rng);
            spectral::SvdFactors f = spectral::svd(a);
            const std::size_t nl = f.left.row_modes(), nr = f.right.row_modes();
            Tensor lg = einstein_product(conj_transpose(f.left), f.left, nl);
            Tensor rg = einstein_product(conj_transpose(f.right), f.right, nr);
            if (frobenius_norm(linear_combine(1.0, lg, -1.0, identity(f.left.row_shape()))) > 1e-10 ||
                frobenius_norm(linear_combine(1.0, rg, -1.0, identity(f.right.row_shape()))) > 1e-10)
                return "instance " + std::to_string(k) + ": factor not unitary";
            DenseMatrix sig(f.left.row_size(), f.right.row_size());
            for (std::size_t j = 0; j < f.singular_values.size(); ++j)
                sig.at(j, j) = f.singular_values[j];
            Tensor mid = fold(sig, f.left.row_shape(), f.right.row_shape());
            Tensor rec = einstein_product(einstein_product(f.left, mid, nl),
                                          conj_transpose(f.right), nr);
            Tensor diff = linear_combine(1.0, rec, -1.0, a);
            if (frobenius_norm(diff) > 1e-10 * (1.0 + frobenius_norm(a)))
                return "instance " + std::to_string(k) + ": reconstruction residual";
            if (!std::is_sorted(f.singular_values.rbegin(), f.singular_values.rend()))
                return "instance " + std::to_string(k) + ": singular values not sorted";
        }
        return std::string{};
    });

    b.property("polar factors reconstruct with unitary part", [&](Rng& rng) {
        for (std::size_t k = 0; k < std::min<std::size_t>(b.instances, 50); ++k) {
            Tensor a = random_invertible(half_shape_for(k), rng);
            spectral::PolarFactors pf = spectral::polar_decompose(a);
            const std::size_t n = a.row_modes();
            Tensor rec = einstein_product(pf.unitary, pf.positive, n);
            if (frobenius_norm(linear_combine(1.0, rec, -1.0, a)) >
                1e-10 * (1.0 + frobenius_norm(a)))
                return "instance " + std::to_string(k) + ": reconstruction residual";
            Tensor gram = einstein_product(conj_transpose(pf.unitary), pf.unitary, n);
            if (frobenius_norm(linear_combine(1.0, gram, -1.0, identity(a.row_shape()))) > 1e-10)
                return "instance " + std::to_string(k) + ": unitary factor defect";
            std::vector<scalar> pe = spectral::hermitian_eigensystem(pf.positive).values;
            std::vector<double> sv = spectral::singular_values(a);
            for (std::size_t j = 0; j < sv.size(); ++j)
                if (std::abs(pe[j].real() - sv[j]) > 1e-10 * (1.0 + sv[0]))
                    return "instance " + std::to_string(k) + ": |a| spectrum mismatch";
        }
        return std::string{};
    });

    b.square_property("spectrum lies in the numerical range",
                      [&](const Tensor& a, std::size_t, Rng&) {
                          Boundary bd = numrange::boundary(a, 256);
                          const double tol = numrange::membership_tolerance(bd);
                          for (const scalar& lam : spectral::eigenvalues(a).values)
                              if (!numrange::contains_point(bd, lam, tol))
                                  return std::string("eigenvalue escapes the sampled range");
                          return std::string{};
                      });

    b.square_property("boundary samples are consistent and convex",
                      [&](const Tensor& a, std::size_t, Rng&) {
                          Boundary bd = numrange::boundary(a, 128);
                          Boundary ser = numrange::boundary_serial(a, 128);
                          for (std::size_t k = 0; k < bd.samples.size(); ++k) {
                              const auto &p = bd.samples[k], &q = ser.samples[k];
                              if (p.theta != q.theta || p.support != q.support ||
                                  p.point != q.point)
                                  return std::string("parallel and serial sampling differ");
                              const double re_rot = std::cos(p.theta) * p.point.real() -
                                                    std::sin(p.theta) * p.point.imag();
                              if (std::abs(re_rot - p.support) > 1e-8 * (1.0 + bd.source_norm))
                                  return std::string("support does not match the sampled point");
                          }
                          if (!numrange::convexity_certificate(bd))
                              return std::string("convexity certificate failed");
                          return std::string{};
                      });

    b.property("radius bounded by half norm, norm, and spectral radius", [&](Rng& rng) {
        for (std::size_t k = 0; k < b.instances; ++k) {
            Tensor a = generate::random_square({2, 2}, rng);
            const double w = numrange::numerical_radius(a, 500);
            const double nrm = spectral::spectral_norm(a);
            if (w < 0.5 * nrm - 1e-6 || w > nrm + 1e-6)
                return "instance " + std::to_string(k) + ": bounds violated (w=" + fmt(w) +
                       ", norm=" + fmt(nrm) + ")";
            if (spectral::spectral_radius(a) > w + 1e-6)
                return "instance " + std::to_string(k) + ": spectral radius exceeds the grid radius";
        }
        return std::string{};
    });

    b.property("product radius bound w(a*b) <= 4 w(a) w(b)", [&](Rng& rng) {
        for (std::size_t k = 0; k < b.instances; ++k) {
            Tensor a = generate::random_square({2, 2}, rng);
            Tensor t = generate::random_square({2, 2}, rng);
            const double wab = numrange::numerical_radius(einstein_product(a, t, 2), 500);
            const double wa = numrange::numerical_radius(a, 500);
            const double wb = numrange::numerical_radius(t, 500);
            if (wab > 4.0 * wa * wb + 1e-6)
                return "instance " + std::to_string(k) + ": product bound violated";
        }
        return std::string{};
    });

    b.square_property("affine law for the numerical range",
                      [&](const Tensor& a, std::size_t, Rng& rng) {
                          const scalar alpha =
                              std::polar(rng.uniform(0.5, 1.5), rng.uniform(0.0, 2.0 * std::numbers::pi));
                          const scalar beta = rng.complex_uniform();
                          Tensor shifted = linear_combine(alpha, a, beta, identity(a.row_shape()));
                          Boundary ba = numrange::boundary(a, 256);
                          Boundary bs = numrange::boundary(shifted, 256);
                          const double ta = numrange::membership_tolerance(ba);
                          const double ts = numrange::membership_tolerance(bs);
                          for (std::size_t k = 0; k < ba.samples.size(); k += 16) {
                              const scalar z = ba.samples[k].point;
                              if (!numrange::contains_point(bs, alpha * z + beta, ts))
                                  return std::string("forward affine image escapes");
                          }
                          for (std::size_t k = 0; k < bs.samples.size(); k += 16) {
                              const scalar z = bs.samples[k].point;
                              if (!numrange::contains_point(ba, (z - beta) / alpha, ta))
                                  return std::string("inverse affine image escapes");
                          }
                          return std::string{};
                      });

    b.square_property("subadditivity of ranges and radii",
                      [&](const Tensor& a, std::size_t, Rng& rng) {
                          Tensor t = generate::random_square(a.row_shape(), rng);
                          Tensor sum = linear_combine(1.0, a, 1.0, t);
                          const double ws = numrange::numerical_radius(sum, 500);
                          const double wa = numrange::numerical_radius(a, 500);
                          const double wt = numrange::numerical_radius(t, 500);
                          if (ws > wa + wt + 1e-6) return std::string("radius subadditivity fails");
                          for (int j = 0; j < 4; ++j) {
                              Tensor x = generate::random_unit(a.row_shape(), rng);
                              const scalar gap = numrange::rayleigh(sum, x) -
                                                 numrange::rayleigh(a, x) - numrange::rayleigh(t, x);
                              if (std::abs(gap) > 1e-12 * (1.0 + frobenius_norm(sum)))
                                  return std::string("rayleigh additivity gap");
                          }
                          return std::string{};
                      });

    b.square_property("real and imaginary extrema match the parts",
                      [&](const Tensor& a, std::size_t, Rng&) {
                          Boundary bd = numrange::boundary(a, 512);
                          double max_re = bd.samples[0].point.real();
                          double max_im = bd.samples[0].point.imag();
                          for (const auto& s : bd.samples) {
                              max_re = std::max(max_re, s.point.real());
                              max_im = std::max(max_im, s.point.imag());
                          }
                          const double lam_h =
                              spectral::hermitian_eigensystem(hermitian_part(a)).values[0].real();
                          Tensor imag_part = scale(scalar(0.0, -1.0), skew_hermitian_part(a));
                          const double lam_s =
                              spectral::hermitian_eigensystem(imag_part).values[0].real();
                          const double tol = 1e-8 * (1.0 + frobenius_norm(a));
                          if (std::abs(max_re - lam_h) > tol)
                              return std::string("Re extremum gap ") + fmt(std::abs(max_re - lam_h));
                          if (std::abs(max_im - lam_s) > tol)
                              return std::string("Im extremum gap ") + fmt(std::abs(max_im - lam_s));
                          return std::string{};
                      });

    b.square_property("transpose laws for support functions",
                      [&](const Tensor& a, std::size_t, Rng&) {
                          const std::size_t n = 256;
                          Boundary ba = numrange::boundary(a, n);
                          Boundary bt = numrange::boundary(transpose(a), n);
                          Boundary bh = numrange::boundary(conj_transpose(a), n);
                          const double tol = 1e-8 * (1.0 + ba.source_norm);
                          for (std::size_t k = 0; k < n; ++k) {
                              if (std::abs(ba.samples[k].support - bt.samples[k].support) > tol)
                                  return std::string("transpose support differs");
                              const std::size_t mirror = (n - k) % n;
                              if (std::abs(bh.samples[k].support - ba.samples[mirror].support) > tol)
                                  return std::string("conjugate transpose support differs");
                          }
                          return std::string{};
                      });

    b.property("isometry compression stays inside the range", [&](Rng& rng) {
        for (std::size_t k = 0; k < b.instances; ++k) {
            Tensor a = generate::random_square({2, 2}, rng);
            Tensor iso = generate::random_isometry({2, 2}, {3}, rng);
            Tensor compressed = einstein_product(
                einstein_product(conj_transpose(iso), a, 2), iso, 2);
            Boundary bd = numrange::boundary(a, 256);
            const double tol = numrange::membership_tolerance(bd);
            for (int j = 0; j < 6; ++j) {
                Tensor x = generate::random_unit({3}, rng);
                if (!numrange::contains_point(bd, numrange::rayleigh(compressed, x), tol))
                    return "instance " + std::to_string(k) + ": compressed value escapes";
            }
        }
        return std::string{};
    });

    b.square_property("convex interpolation stays inside",
                      [&](const Tensor& a, std::size_t, Rng& rng) {
                          Boundary bd = numrange::boundary(a, 256);
                          const double tol = numrange::membership_tolerance(bd);
                          for (int j = 0; j < 4; ++j) {
                              const std::size_t idx =
                                  static_cast<std::size_t>(rng.uniform(0.0, 256.0));
                              const scalar z1 = bd.samples[idx % bd.samples.size()].point;
                              Tensor x = generate::random_unit(a.row_shape(), rng);
                              const scalar z2 = numrange::rayleigh(a, x);
                              for (double t : {0.25, 0.5, 0.75})
                                  if (!numrange::contains_point(bd, t * z1 + (1.0 - t) * z2, tol))
                                      return std::string("interpolant escapes the sampled range");
                          }
                          return std::string{};
                      });

    b.square_property("radius refinement is monotone", [&](const Tensor& a, std::size_t, Rng&) {
        const double w1 = numrange::numerical_radius(a, 125);
        const double w2 = numrange::numerical_radius(a, 250);
        const double w4 = numrange::numerical_radius(a, 500);
        if (w2 < w1 - 1e-12 || w4 < w2 - 1e-12)
            return std::string("refinement decreased the radius");
        return std::string{};
    });

    b.property("cauchy-schwarz for the tensor inner product", [&](Rng& rng) {
        for (std::size_t k = 0; k < b.instances; ++k) {
            const Shape half = half_shape_for(k);
            Tensor x = generate::random_tensor(half, half.size(), rng);
            Tensor y = generate::random_tensor(half, half.size(), rng);
            if (std::abs(inner_product(x, y)) >
                frobenius_norm(x) * frobenius_norm(y) * (1.0 + 1e-12))
                return "instance " + std::to_string(k) + ": inequality violated";
        }
        return std::string{};
    });

    b.square_property("penrose equations and biduality", [&](const Tensor& a, std::size_t k,
                                                             Rng& rng) {
        Tensor cand = a;
        if (k != static_cast<std::size_t>(-1) && k % 3 == 1)
            cand = generate::random_rank_deficient(a.row_shape(), a.row_size() - 1, rng);
        if (k != static_cast<std::size_t>(-1) && k % 3 == 2)
            cand = generate::random_tensor({2, 3, 2, 2}, 2, rng);
        Tensor x = pinv::moore_penrose(cand);
        pinv::PenroseResiduals res = pinv::penrose_residuals(cand, x);
        const double allowed =
            1e-8 * (1.0 + frobenius_norm(cand)) * (1.0 + frobenius_norm(x));
        if (res.max() > allowed) return std::string("penrose residual ") + fmt(res.max());
        Tensor back = pinv::moore_penrose(x);
        if (frobenius_norm(linear_combine(1.0, back, -1.0, cand)) >
            1e-8 * (1.0 + frobenius_norm(cand)))
            return std::string("biduality gap");
        return std::string{};
    });

    b.property("rank deficiency pairs with the pseudoinverse", [&](Rng& rng) {
        for (std::size_t k = 0; k < b.instances; ++k) {
            const Shape half = half_shape_for(k);
            const std::size_t n = shape_product(half, 0, half.size());
            Tensor a = (k % 2 == 0) ? generate::random_rank_deficient(half, n - 1, rng)
                                    : generate::random_square(half, rng);
            Tensor x = pinv::moore_penrose(a);
            const bool def_a = rank_of(a) < n;
            const bool def_x = rank_of(x) < n;
            if (def_a != def_x) return "instance " + std::to_string(k) + ": ranks disagree";
        }
        return std::string{};
    });

    b.property("normal reciprocal eigenvalue law and its counterexample", [&](Rng& rng) {
        for (std::size_t k = 0; k < std::min<std::size_t>(b.instances, 50); ++k) {
            std::vector<scalar> lam;
            Tensor a = generate::random_normal(half_shape_for(k), rng, &lam);
            std::vector<scalar> pl = spectral::eigenvalues(pinv::moore_penrose(a)).values;
            for (const scalar& v : lam) {
                const scalar recip = 1.0 / v;
                double best = 1e30;
                for (const scalar& w : pl) best = std::min(best, std::abs(w - recip));
                if (best > 1e-8 * (1.0 + std::abs(recip)))
                    return "instance " + std::to_string(k) + ": reciprocal missing";
            }
        }
        Tensor ones = ones_row_counterexample();
        std::vector<scalar> sa = spectral::eigenvalues(ones).values;
        double near_one = 1e30;
        for (const scalar& v : sa) near_one = std::min(near_one, std::abs(v - 1.0));
        if (near_one > 1e-10) return std::string("counterexample lost its unit eigenvalue");
        std::vector<scalar> sp = spectral::eigenvalues(pinv::moore_penrose(ones)).values;
        double best = 1e30;
        for (const scalar& v : sp) best = std::min(best, std::abs(v - 1.0));
        if (best < 0.5) return std::string("counterexample unexpectedly kept eigenvalue 1");
        return std::string{};
    });

    b.property("normality is preserved by the pseudoinverse", [&](Rng& rng) {
        for (std::size_t k = 0; k < std::min<std::size_t>(b.instances, 40); ++k) {
            Tensor a = (k % 2 == 0) ? generate::random_normal(half_shape_for(k), rng)
                                    : generate::random_square(half_shape_for(k), rng);
            const bool na = pinv::classify_structure(a, 1e-8).normal;
            const bool nx = pinv::classify_structure(pinv::moore_penrose(a), 1e-8).normal;
            if (na != nx) return "instance " + std::to_string(k) + ": normality flipped";
        }
        return std::string{};
    });

    b.property("EP tensors keep reciprocal membership", [&](Rng& rng) {
        for (std::size_t k = 0; k < std::min<std::size_t>(b.instances, 30); ++k) {
            std::vector<scalar> lam;
            Tensor a = generate::random_normal({2, 2}, rng, &lam);
            if (!pinv::is_ep(a, 1e-8)) return "instance " + std::to_string(k) + ": not EP";
            Tensor x = pinv::moore_penrose(a);
            Boundary ba = numrange::boundary(a, 256);
            Boundary bx = numrange::boundary(x, 256);
            for (const scalar& v : lam) {
                if (!numrange::contains_point(ba, v, numrange::membership_tolerance(ba)))
                    return "instance " + std::to_string(k) + ": eigenvalue escapes W(a)";
                if (!numrange::contains_point(bx, 1.0 / v, numrange::membership_tolerance(bx)))
                    return "instance " + std::to_string(k) + ": reciprocal escapes W(a+)";
            }
        }
        return std::string{};
    });

    b.property("zero membership pairs with the pseudoinverse", [&](Rng& rng) {
        std::size_t inconclusive = 0;
        for (std::size_t k = 0; k < std::min<std::size_t>(b.instances, 40); ++k) {
            const Shape half{2, 2};
            Tensor a = (k % 2 == 0) ? generate::random_rank_deficient(half, 3, rng)
                                    : generate::random_square(half, rng);
            Tensor x = pinv::moore_penrose(a);
            Boundary ba = numrange::boundary(a, 256);
            Boundary bx = numrange::boundary(x, 256);
            const auto ca = numrange::classify_point(ba, 0.0, numrange::membership_tolerance(ba));
            const auto cx = numrange::classify_point(bx, 0.0, numrange::membership_tolerance(bx));
            if (ca == numrange::Membership::boundary || cx == numrange::Membership::boundary) {
                ++inconclusive;
                continue;
            }
            if (ca != cx) return "instance " + std::to_string(k) + ": membership disagrees";
        }
        (void)inconclusive;  // near-boundary cases are skips, not failures
        return std::string{};
    });

    b.square_property("norm product bounded by radius product",
                      [&](const Tensor& a, std::size_t, Rng&) {
                          if (frobenius_norm(a) == 0.0) return std::string{};
                          Tensor x = pinv::moore_penrose(a);
                          const double prod =
                              spectral::spectral_norm(a) * spectral::spectral_norm(x);
                          const double wprod = numrange::numerical_radius(a, 500) *
                                               numrange::numerical_radius(x, 500);
                          if (prod < 1.0 - 1e-9) return std::string("norm product below one");
                          if (prod > 4.0 * wprod + 1e-6)
                              return std::string("radius product bound violated");
                          return std::string{};
                      });

    b.property("unitary classification agrees with the gram test", [&](Rng& rng) {
        for (std::size_t k = 0; k < 20; ++k) {
            Tensor u = generate::random_unitary({2, 2}, rng);
            if (!pinv::classify_structure(u, 1e-8).unitary)
                return "unitary instance " + std::to_string(k) + ": gram test failed";
            if (!numrange::classify_unitary(u, 512, 1e-6))
                return "unitary instance " + std::to_string(k) + ": radius test failed";
        }
        for (std::size_t k = 0; k < 20; ++k) {
            Tensor a = random_invertible({2, 2}, rng);
            Tensor gram = einstein_product(conj_transpose(a), a, 2);
            Tensor defect = linear_combine(1.0, gram, -1.0, identity(Shape{2, 2}));
            if (frobenius_norm(defect) < 0.1) continue;  // too close to unitary, skip draw
            if (pinv::classify_structure(a, 1e-8).unitary)
                return "generic instance " + std::to_string(k) + ": gram test claims unitary";
            if (numrange::classify_unitary(a, 512, 1e-6))
                return "generic instance " + std::to_string(k) + ": radius test claims unitary";
        }
        return std::string{};
    });

    b.property("orthonormal sums give the pseudoinverse in closed form", [&](Rng& rng) {
        for (std::size_t k = 0; k < std::min<std::size_t>(b.instances, 30); ++k) {
            std::vector<Tensor> us = generate::random_orthonormal_list({2, 2}, 2, rng);
            std::vector<Tensor> vs = generate::random_orthonormal_list({2, 2}, 2, rng);
            auto [a, ap] = pinv::orthonormal_sum(us, vs);
            if (pinv::penrose_residuals(a, ap).max() > 1e-8)
                return "instance " + std::to_string(k) + ": penrose residual";
            Tensor mp = pinv::moore_penrose(a);
            if (frobenius_norm(linear_combine(1.0, ap, -1.0, mp)) > 1e-8)
                return "instance " + std::to_string(k) + ": closed form differs from svd route";
            Boundary bp = numrange::boundary(ap, 64);
            Boundary bh = numrange::boundary(conj_transpose(a), 64);
            for (std::size_t j = 0; j < 64; ++j)
                if (std::abs(bp.samples[j].support - bh.samples[j].support) > 1e-6)
                    return "instance " + std::to_string(k) + ": W(a+) and W(a^H) differ";
        }
        return std::string{};
    });

    return std::move(b.results);
}

std::string format_report(const std::vector<CheckResult>& results, std::uint64_t seed) {
    std::ostringstream out;
    out << "seed " << seed << "\n";
    for (const CheckResult& r : results) {
        out << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.detail.empty()) out << "  [" << r.detail << "]";
        out << "\n";
    }
    std::size_t passed = 0;
    for (const CheckResult& r : results)
        if (r.pass) ++passed;
    out << passed << "/" << results.size() << " properties passed\n";
    return out.str();
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace tenrange::checks
