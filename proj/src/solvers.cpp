#include "tenrange/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tenrange/errors.hpp"

namespace tenrange::solvers {

namespace {

constexpr double kEps = 2.220446049250313e-16;

double abs1(scalar v) { return std::abs(v.real()) + std::abs(v.imag()); }

// c real, s complex with [c s; -conj(s) c] [f; g] = [r; 0].
void givens(scalar f, scalar g, double& c, scalar& s) {
    if (g == scalar(0.0)) {
        c = 1.0;
        s = 0.0;
        return;
    }
    if (f == scalar(0.0)) {
        c = 0.0;
        s = std::conj(g) / std::abs(g);
        return;
    }
    const double d = std::sqrt(std::norm(f) + std::norm(g));
    c = std::abs(f) / d;
    s = (f / std::abs(f)) * std::conj(g) / d;
}

// Unitary 2x2 diagonalizing the Hermitian block [[app, apq],[conj(apq), aqq]]:
// U = [[c, s],[-conj(ph) s, conj(ph) c]] with ph = apq/|apq| and a real Jacobi
// angle, so U^H A U has zero off-diagonal and diagonal app - t|apq|, aqq + t|apq|.
struct JacobiRotation {
    double c = 1.0;
    double s = 0.0;
    scalar phase = 1.0;
    double t = 0.0;
};

JacobiRotation jacobi_rotation(double app, double aqq, scalar apq) {
    JacobiRotation r;
    const double mag = std::abs(apq);
    if (mag == 0.0) return r;
    r.phase = apq / mag;
    const double tau = (aqq - app) / (2.0 * mag);
    double t;
    if (std::isinf(tau)) {
        t = 0.0;
    } else {
        t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    }
    r.t = t;
    r.c = 1.0 / std::sqrt(1.0 + t * t);
    r.s = t * r.c;
    return r;
}

void to_hessenberg(DenseMatrix& a) {
    const std::size_t n = a.rows;
    if (n < 3) return;
    std::vector<scalar> v(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double xnorm2 = 0;
        for (std::size_t r = k + 1; r < n; ++r) xnorm2 += std::norm(a.at(r, k));
        const double xnorm = std::sqrt(xnorm2);
        if (xnorm == 0.0) continue;
        const scalar x0 = a.at(k + 1, k);
        const scalar phase = (x0 == scalar(0.0)) ? scalar(1.0) : x0 / std::abs(x0);
        const scalar alpha = -phase * xnorm;

        for (std::size_t r = k + 1; r < n; ++r) v[r] = a.at(r, k);
        v[k + 1] -= alpha;
        double vnorm2 = 0;
        for (std::size_t r = k + 1; r < n; ++r) vnorm2 += std::norm(v[r]);
        if (vnorm2 == 0.0) continue;
        const double inv = 2.0 / vnorm2;

        // a <- (I - inv * v v^H) a
        for (std::size_t c = k; c < n; ++c) {
            scalar dot = 0;
            for (std::size_t r = k + 1; r < n; ++r) dot += std::conj(v[r]) * a.at(r, c);
            dot *= inv;
            for (std::size_t r = k + 1; r < n; ++r) a.at(r, c) -= dot * v[r];
        }
        // a <- a (I - inv * v v^H)
        for (std::size_t r = 0; r < n; ++r) {
            scalar dot = 0;
            for (std::size_t c = k + 1; c < n; ++c) dot += a.at(r, c) * v[c];
            dot *= inv;
            for (std::size_t c = k + 1; c < n; ++c) a.at(r, c) -= dot * std::conj(v[c]);
        }
        a.at(k + 1, k) = alpha;
        for (std::size_t r = k + 2; r < n; ++r) a.at(r, k) = 0.0;
    }
}

}  // namespace

LuFactors lu_factor(DenseMatrix m) {
    if (m.rows != m.cols) throw std::invalid_argument("lu_factor requires a square matrix");
    const std::size_t n = m.rows;
    LuFactors f;
    f.perm.resize(n);
    std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(m.at(k, k));
        for (std::size_t r = k + 1; r < n; ++r) {
            const double cand = std::abs(m.at(r, k));
            if (cand > best) {
                best = cand;
                piv = r;
            }
        }
        if (piv != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(piv, c));
            std::swap(f.perm[k], f.perm[piv]);
            f.sign = -f.sign;
        }
        const scalar pivot = m.at(k, k);
        if (pivot == scalar(0.0)) {
            f.zero_pivot = true;
            continue;
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            const scalar mult = m.at(r, k) / pivot;
            m.at(r, k) = mult;
            if (mult == scalar(0.0)) continue;
            for (std::size_t c = k + 1; c < n; ++c) m.at(r, c) -= mult * m.at(k, c);
        }
    }
    f.lu = std::move(m);
    return f;
}

scalar lu_determinant(const LuFactors& f) {
    scalar det = static_cast<double>(f.sign);
    for (std::size_t k = 0; k < f.lu.rows; ++k) det *= f.lu.at(k, k);
    return det;
}

std::vector<scalar> lu_solve(const LuFactors& f, std::vector<scalar> rhs, double pivot_floor) {
    const std::size_t n = f.lu.rows;
    std::vector<scalar> x(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = rhs[f.perm[k]];
    // forward: L has unit diagonal
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t c = 0; c < k; ++c) x[k] -= f.lu.at(k, c) * x[c];
    // backward
    for (std::size_t k = n; k-- > 0;) {
        for (std::size_t c = k + 1; c < n; ++c) x[k] -= f.lu.at(k, c) * x[c];
        scalar pivot = f.lu.at(k, k);
        if (std::abs(pivot) < pivot_floor) {
            pivot = (pivot == scalar(0.0)) ? scalar(pivot_floor)
                                           : pivot / std::abs(pivot) * pivot_floor;
        }
        if (pivot == scalar(0.0)) throw numerical_error("singular system in lu_solve");
        x[k] /= pivot;
    }
    return x;
}

scalar determinant(const DenseMatrix& m) { return lu_determinant(lu_factor(m)); }

DenseMatrix inverse_lu(const DenseMatrix& m) {
    const std::size_t n = m.rows;
    LuFactors f = lu_factor(m);
    if (f.zero_pivot) throw numerical_error("matrix is singular to working precision");
    DenseMatrix inv(n, n);
    std::vector<scalar> e(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::fill(e.begin(), e.end(), scalar(0.0));
        e[c] = 1.0;
        std::vector<scalar> col = lu_solve(f, e);
        for (std::size_t r = 0; r < n; ++r) inv.at(r, c) = col[r];
    }
    return inv;
}

std::vector<scalar> eigenvalues_qr(DenseMatrix a) {
    if (a.rows != a.cols) throw std::invalid_argument("eigenvalues require a square matrix");
    const std::size_t n = a.rows;
    std::vector<scalar> eig(n);
    if (n == 0) return eig;
    to_hessenberg(a);
    const double anorm = frobenius_norm(a);
    if (anorm == 0.0) return eig;

    long hi = static_cast<long>(n) - 1;
    int since_deflation = 0;
    long total = 0;
    const long cap = 100 * static_cast<long>(n);
    while (hi >= 0) {
        long lo = hi;
        while (lo > 0) {
            double s = abs1(a.at(lo - 1, lo - 1)) + abs1(a.at(lo, lo));
            if (s == 0.0) s = anorm;
            if (abs1(a.at(lo, lo - 1)) <= kEps * s) {
                a.at(lo, lo - 1) = 0.0;
                break;
            }
            --lo;
        }
        if (lo == hi) {
            eig[static_cast<std::size_t>(hi)] = a.at(hi, hi);
            --hi;
            since_deflation = 0;
            continue;
        }
        if (++total > cap) throw numerical_error("eigenvalue QR iteration exceeded the step cap");
        ++since_deflation;

        scalar mu;
        {
            const scalar h00 = a.at(hi - 1, hi - 1), h01 = a.at(hi - 1, hi);
            const scalar h10 = a.at(hi, hi - 1), h11 = a.at(hi, hi);
            if (since_deflation % 16 == 0) {
                mu = h11 + scalar(abs1(h10), 0.0);  // exceptional shift
            } else {
                const scalar mid = 0.5 * (h00 + h11);
                const scalar disc = std::sqrt(0.25 * (h00 - h11) * (h00 - h11) + h01 * h10);
                const scalar mu1 = mid + disc, mu2 = mid - disc;
                mu = (std::abs(mu1 - h11) < std::abs(mu2 - h11)) ? mu1 : mu2;
            }
        }

        // Explicit shifted QR sweep on the window [lo..hi].
        for (long k = lo; k <= hi; ++k) a.at(k, k) -= mu;
        std::vector<double> cs(static_cast<std::size_t>(hi - lo));
        std::vector<scalar> sn(static_cast<std::size_t>(hi - lo));
        for (long k = lo; k < hi; ++k) {
            double c;
            scalar s;
            givens(a.at(k, k), a.at(k + 1, k), c, s);
            cs[static_cast<std::size_t>(k - lo)] = c;
            sn[static_cast<std::size_t>(k - lo)] = s;
            for (long j = k; j <= hi; ++j) {
                const scalar t1 = a.at(k, j), t2 = a.at(k + 1, j);
                a.at(k, j) = c * t1 + s * t2;
                a.at(k + 1, j) = -std::conj(s) * t1 + c * t2;
            }
        }
        for (long k = lo; k < hi; ++k) {
            const double c = cs[static_cast<std::size_t>(k - lo)];
            const scalar s = sn[static_cast<std::size_t>(k - lo)];
            const long rmax = std::min(k + 2, hi);
            for (long r = lo; r <= rmax; ++r) {
                const scalar t1 = a.at(r, k), t2 = a.at(r, k + 1);
                a.at(r, k) = c * t1 + std::conj(s) * t2;
                a.at(r, k + 1) = -s * t1 + c * t2;
            }
        }
        for (long k = lo; k <= hi; ++k) a.at(k, k) += mu;
    }

    std::sort(eig.begin(), eig.end(), [](scalar x, scalar y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return eig;
}

std::vector<scalar> eigenvector_inverse_iteration(const DenseMatrix& m, scalar lambda,
                                                  std::uint64_t seed) {
    const std::size_t n = m.rows;
    double anorm = frobenius_norm(m);
    if (anorm == 0.0) anorm = 1.0;
    const double floor_val = kEps * anorm * static_cast<double>(n);

    auto residual_of = [&](const std::vector<scalar>& x) {
        std::vector<scalar> ax = matvec(m, x);
        double acc = 0;
        for (std::size_t k = 0; k < n; ++k) acc += std::norm(ax[k] - lambda * x[k]);
        return std::sqrt(acc);
    };

    std::vector<scalar> best;
    double best_res = std::numeric_limits<double>::infinity();
    std::uint64_t state = seed ? seed : 1;
    auto next_unit = [&]() {  // xorshift64*
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return static_cast<double>((state * 0x2545F4914F6CDD1DULL) >> 11) * 0x1.0p-53 * 2.0 - 1.0;
    };

    for (int attempt = 0; attempt < 4; ++attempt) {
        DenseMatrix shifted = m;
        const scalar shift =
            lambda + scalar(attempt * 16.0 * floor_val, attempt * 4.0 * floor_val);
        for (std::size_t k = 0; k < n; ++k) shifted.at(k, k) -= shift;
        LuFactors f = lu_factor(std::move(shifted));

        std::vector<scalar> x(n);
        for (std::size_t k = 0; k < n; ++k) x[k] = scalar(next_unit(), next_unit());
        double xn = 0;
        for (const scalar& v : x) xn += std::norm(v);
        xn = std::sqrt(xn);
        for (scalar& v : x) v /= xn;

        for (int it = 0; it < 8; ++it) {
            x = lu_solve(f, std::move(x), floor_val > 0 ? floor_val : 1e-300);
            double norm2 = 0;
            for (const scalar& v : x) norm2 += std::norm(v);
            const double nrm = std::sqrt(norm2);
            if (nrm == 0.0 || !std::isfinite(nrm)) break;
            for (scalar& v : x) v /= nrm;
            const double res = residual_of(x);
            if (res < best_res) {
                best_res = res;
                best = x;
            }
            if (res <= 1e-11 * anorm) break;
        }
        if (best_res <= 1e-11 * anorm) break;
    }

    if (best.empty() || best_res > 1e-8 * anorm)
        throw numerical_error("inverse iteration failed to reach the residual target");

    // deterministic phase: largest component made real positive
    std::size_t imax = 0;
    for (std::size_t k = 1; k < n; ++k)
        if (std::abs(best[k]) > std::abs(best[imax])) imax = k;
    if (std::abs(best[imax]) > 0) {
        const scalar ph = std::conj(best[imax]) / std::abs(best[imax]);
        for (scalar& v : best) v *= ph;
    }
    return best;
}

HermitianEig eigh_jacobi(DenseMatrix a) {
    if (a.rows != a.cols) throw std::invalid_argument("eigh requires a square matrix");
    const std::size_t n = a.rows;
    // Work on the Hermitian average so tiny asymmetry from callers cannot bias sweeps.
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) {
            const scalar v = 0.5 * (a.at(r, c) + std::conj(a.at(c, r)));
            a.at(r, c) = v;
            a.at(c, r) = std::conj(v);
        }

    HermitianEig out;
    out.vectors = identity_matrix(n);
    out.values.assign(n, 0.0);
    if (n == 0) return out;
    const double fro = frobenius_norm(a);
    if (fro == 0.0) return out;
    const double target = 1e-15 * fro;

    const int max_sweeps = 64;
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        double off2 = 0;
        for (std::size_t r = 0; r + 1 < n; ++r)
            for (std::size_t c = r + 1; c < n; ++c) off2 += std::norm(a.at(r, c));
        if (std::sqrt(2.0 * off2) <= target) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const scalar apq = a.at(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                const double app = a.at(p, p).real();
                const double aqq = a.at(q, q).real();
                const JacobiRotation rot = jacobi_rotation(app, aqq, apq);
                const double c = rot.c, s = rot.s;
                const scalar ph = rot.phase;
                // rows: U^H A
                for (std::size_t j = 0; j < n; ++j) {
                    const scalar t1 = a.at(p, j), t2 = a.at(q, j);
                    a.at(p, j) = c * t1 - ph * s * t2;
                    a.at(q, j) = s * t1 + ph * c * t2;
                }
                // columns: (U^H A) U
                for (std::size_t i = 0; i < n; ++i) {
                    const scalar t1 = a.at(i, p), t2 = a.at(i, q);
                    a.at(i, p) = c * t1 - std::conj(ph) * s * t2;
                    a.at(i, q) = s * t1 + std::conj(ph) * c * t2;
                }
                // eigenvector accumulation: V U
                for (std::size_t i = 0; i < n; ++i) {
                    const scalar t1 = out.vectors.at(i, p), t2 = out.vectors.at(i, q);
                    out.vectors.at(i, p) = c * t1 - std::conj(ph) * s * t2;
                    out.vectors.at(i, q) = s * t1 + std::conj(ph) * c * t2;
                }
                a.at(p, q) = 0.0;
                a.at(q, p) = 0.0;
                a.at(p, p) = scalar(app - rot.t * std::abs(apq), 0.0);
                a.at(q, q) = scalar(aqq + rot.t * std::abs(apq), 0.0);
            }
        }
    }
    if (sweep == max_sweeps) throw numerical_error("hermitian Jacobi did not converge");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a.at(i, i).real() > a.at(j, j).real(); });
    DenseMatrix sorted_vecs(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        out.values[c] = a.at(order[c], order[c]).real();
        for (std::size_t r = 0; r < n; ++r) sorted_vecs.at(r, c) = out.vectors.at(r, order[c]);
    }
    out.vectors = std::move(sorted_vecs);
    return out;
}

MatrixSvd svd_jacobi(const DenseMatrix& m) {
    const bool flip = m.rows < m.cols;
    DenseMatrix b = flip ? conj_transpose(m) : m;
    const std::size_t rows = b.rows, cols = b.cols;

    DenseMatrix v = identity_matrix(cols);
    // Columns below this norm are deflated to exact zero: a backward error of
    // order eps*||b||, and it stops exactly rank-deficient columns from
    // decaying geometrically into denormals instead of converging.
    const double deflate = kEps * frobenius_norm(b);
    const int max_sweeps = 60;
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < cols; ++p) {
            for (std::size_t q = p + 1; q < cols; ++q) {
                double alpha = 0, beta = 0;
                scalar gamma = 0;
                for (std::size_t i = 0; i < rows; ++i) {
                    alpha += std::norm(b.at(i, p));
                    beta += std::norm(b.at(i, q));
                    gamma += std::conj(b.at(i, p)) * b.at(i, q);
                }
                if (std::sqrt(alpha) <= deflate) {
                    for (std::size_t i = 0; i < rows; ++i) b.at(i, p) = 0.0;
                    continue;
                }
                if (std::sqrt(beta) <= deflate) {
                    for (std::size_t i = 0; i < rows; ++i) b.at(i, q) = 0.0;
                    continue;
                }
                if (std::abs(gamma) <= kEps * std::sqrt(alpha) * std::sqrt(beta)) continue;
                rotated = true;
                const JacobiRotation rot = jacobi_rotation(alpha, beta, gamma);
                const double c = rot.c, s = rot.s;
                const scalar ph = rot.phase;
                for (std::size_t i = 0; i < rows; ++i) {
                    const scalar t1 = b.at(i, p), t2 = b.at(i, q);
                    b.at(i, p) = c * t1 - std::conj(ph) * s * t2;
                    b.at(i, q) = s * t1 + std::conj(ph) * c * t2;
                }
                for (std::size_t i = 0; i < cols; ++i) {
                    const scalar t1 = v.at(i, p), t2 = v.at(i, q);
                    v.at(i, p) = c * t1 - std::conj(ph) * s * t2;
                    v.at(i, q) = s * t1 + std::conj(ph) * c * t2;
                }
            }
        }
        if (!rotated) break;
    }
    if (sweep == max_sweeps) throw numerical_error("one-sided Jacobi SVD did not converge");

    std::vector<double> sig(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        double acc = 0;
        for (std::size_t i = 0; i < rows; ++i) acc += std::norm(b.at(i, j));
        sig[j] = std::sqrt(acc);
    }
    std::vector<std::size_t> order(cols);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return sig[i] > sig[j]; });

    std::vector<double> sigma(cols);
    DenseMatrix vs(cols, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        sigma[j] = sig[order[j]];
        for (std::size_t i = 0; i < cols; ++i) vs.at(i, j) = v.at(i, order[j]);
    }

    // Left factor: normalized columns where sigma clears the direction cutoff,
    // orthonormal completion elsewhere (and for the trailing rows - cols slots).
    const double sig_max = sigma.empty() ? 0.0 : sigma[0];
    const double cutoff = kEps * static_cast<double>(std::max(rows, cols)) * sig_max;
    DenseMatrix u(rows, rows);
    std::size_t filled = 0;
    for (std::size_t j = 0; j < cols && sigma[j] > cutoff && sigma[j] > 0; ++j, ++filled)
        for (std::size_t i = 0; i < rows; ++i) u.at(i, filled) = b.at(i, order[j]) / sigma[j];
    for (std::size_t cand = 0; cand < rows && filled < rows; ++cand) {
        std::vector<scalar> w(rows, scalar(0.0));
        w[cand] = 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < filled; ++j) {
                scalar dot = 0;
                for (std::size_t i = 0; i < rows; ++i) dot += std::conj(u.at(i, j)) * w[i];
                for (std::size_t i = 0; i < rows; ++i) w[i] -= dot * u.at(i, j);
            }
        }
        double nrm = 0;
        for (const scalar& x : w) nrm += std::norm(x);
        nrm = std::sqrt(nrm);
        if (nrm < 0.1) continue;  // candidate nearly inside the span
        for (std::size_t i = 0; i < rows; ++i) u.at(i, filled) = w[i] / nrm;
        ++filled;
    }
    if (filled < rows) throw numerical_error("SVD left-factor completion failed");

    MatrixSvd out;
    if (!flip) {
        out.u = std::move(u);
        out.v = std::move(vs);
        out.sigma = std::move(sigma);
    } else {
        out.u = std::move(vs);
        out.v = std::move(u);
        out.sigma = std::move(sigma);
    }
    return out;
}

double rank_tolerance(const MatrixSvd& svd, std::size_t rows, std::size_t cols) {
    const double sig_max = svd.sigma.empty() ? 0.0 : svd.sigma[0];
    return kEps * static_cast<double>(std::max(rows, cols)) * sig_max;
}

}  // namespace tenrange::solvers
