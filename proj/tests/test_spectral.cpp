#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "tenrange/dense.hpp"
#include "tenrange/errors.hpp"
#include "tenrange/generate.hpp"
#include "tenrange/spectral.hpp"

using namespace tenrange;

namespace {

bool match(std::vector<scalar> x, std::vector<scalar> y, double tol) {
    if (x.size() != y.size()) return false;
    for (const scalar& v : x) {
        std::size_t best = y.size();
        double bd = tol;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (std::abs(v - y[j]) <= bd) {
                bd = std::abs(v - y[j]);
                best = j;
            }
        if (best == y.size()) return false;
        y.erase(y.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return true;
}

double tensor_diff(const Tensor& a, const Tensor& b) {
    double m = 0;
    for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

}  // namespace

TEST_SUITE("spectral") {
    TEST_CASE("spectrum of the diagonal fixture") {
        spectral::Spectrum s = spectral::eigenvalues(fixtures::diag6_real());
        CHECK(match(s.values, {{-1, 0}, {1, 0}, {2, 0}, {3, 0}, {8, 0}, {9, 0}}, 1e-10));
        CHECK(spectral::spectral_radius(fixtures::diag6_real()) == doctest::Approx(9.0));
    }

    TEST_CASE("spectrum of the rank-one ones-row tensor") {
        spectral::Spectrum s = spectral::eigenvalues(fixtures::ones_row());
        REQUIRE(s.values.size() == 6);
        std::size_t zeros_found = 0, ones_found = 0;
        for (const scalar& v : s.values) {
            if (std::abs(v) <= 1e-10) ++zeros_found;
            if (std::abs(v - scalar(1.0)) <= 1e-10) ++ones_found;
        }
        CHECK(zeros_found == 5);
        CHECK(ones_found == 1);
    }

    TEST_CASE("identity spectrum and non-square rejection") {
        spectral::Spectrum s = spectral::eigenvalues(identity({2, 2}));
        for (const scalar& v : s.values) CHECK(std::abs(v - scalar(1.0)) <= 1e-13);
        CHECK_THROWS_AS(spectral::eigenvalues(zeros({2, 3}, 1)), std::invalid_argument);
    }

    TEST_CASE("eigentensor residuals on random tensors") {
        generate::Rng rng(201);
        for (int rep = 0; rep < 5; ++rep) {
            Tensor a = generate::random_square({3, 2}, rng);
            spectral::Spectrum s = spectral::eigenvalues(a, true);
            REQUIRE(s.eigentensors.has_value());
            for (std::size_t k = 0; k < s.values.size(); ++k) {
                const Tensor& x = (*s.eigentensors)[k];
                CHECK(frobenius_norm(x) == doctest::Approx(1.0).epsilon(1e-12));
                Tensor ax = einstein_product(a, x, 2);
                Tensor defect = linear_combine(1.0, ax, -s.values[k], x);
                CHECK(frobenius_norm(defect) <= 1e-8 * (1.0 + frobenius_norm(a)));
            }
        }
    }

    TEST_CASE("hermitian eigensystem of the diagonal fixture") {
        spectral::Spectrum s = spectral::hermitian_eigensystem(fixtures::diag6_real());
        REQUIRE(s.values.size() == 6);
        CHECK(s.values[0].real() == doctest::Approx(9.0).epsilon(1e-12));
        CHECK(s.values[5].real() == doctest::Approx(-1.0).epsilon(1e-12));
        // 9 sits at multi-index (3,2) on the diagonal, so the top eigentensor
        // is that indicator up to phase.
        const Tensor& top = (*s.eigentensors)[0];
        CHECK(std::abs(top.at({3, 2})) == doctest::Approx(1.0).epsilon(1e-12));

        CHECK_THROWS_AS(spectral::hermitian_eigensystem(fixtures::range_example_c()),
                        std::invalid_argument);
    }

    TEST_CASE("hermitian eigentensors are orthonormal") {
        generate::Rng rng(203);
        Tensor a = generate::random_hermitian({3, 2}, rng);
        spectral::Spectrum s = spectral::hermitian_eigensystem(a);
        const auto& vecs = *s.eigentensors;
        for (std::size_t i = 0; i < vecs.size(); ++i)
            for (std::size_t j = i; j < vecs.size(); ++j) {
                const scalar g = inner_product(vecs[i], vecs[j]);
                CHECK(std::abs(g - (i == j ? scalar(1.0) : scalar(0.0))) <= 1e-10);
            }
    }

    TEST_CASE("determinant of fixtures and random products") {
        CHECK(std::abs(spectral::determinant(identity({2, 2})) - scalar(1.0)) <= 1e-14);
        CHECK(spectral::determinant(fixtures::diag6_real()).real() ==
              doctest::Approx(-432.0).epsilon(1e-12));

        generate::Rng rng(207);
        Tensor a = generate::random_square({3, 2}, rng);
        Tensor b = generate::random_square({3, 2}, rng);
        const scalar dab = spectral::determinant(einstein_product(a, b, 2));
        const scalar prod = spectral::determinant(a) * spectral::determinant(b);
        CHECK(std::abs(dab - prod) <= 1e-10 * (1.0 + std::abs(prod)));
    }

    TEST_CASE("singular values of the complex diagonal fixture") {
        std::vector<double> sv = spectral::singular_values(fixtures::diag6_complex());
        const double expect[6] = {std::sqrt(37.0), std::sqrt(26.0), 4.0,
                                  std::sqrt(10.0), std::sqrt(2.0),  1.0};
        REQUIRE(sv.size() == 6);
        for (int k = 0; k < 6; ++k) CHECK(sv[k] == doctest::Approx(expect[k]).epsilon(1e-12));
    }

    TEST_CASE("svd factors reconstruct and are unitary") {
        generate::Rng rng(209);
        Tensor a = generate::random_tensor({2, 3, 2, 2}, 2, rng);
        spectral::SvdFactors f = spectral::svd(a);
        Tensor lg = einstein_product(conj_transpose(f.left), f.left, 2);
        CHECK(frobenius_norm(linear_combine(1.0, lg, -1.0, identity(f.left.row_shape()))) <= 1e-10);
        Tensor rg = einstein_product(conj_transpose(f.right), f.right, 2);
        CHECK(frobenius_norm(linear_combine(1.0, rg, -1.0, identity(f.right.row_shape()))) <=
              1e-10);

        DenseMatrix sig(a.row_size(), a.col_size());
        for (std::size_t k = 0; k < f.singular_values.size(); ++k)
            sig.at(k, k) = f.singular_values[k];
        Tensor rec = einstein_product(
            einstein_product(f.left, fold(sig, a.row_shape(), a.col_shape()), 2),
            conj_transpose(f.right), 2);
        CHECK(frobenius_norm(linear_combine(1.0, rec, -1.0, a)) <=
              1e-10 * (1.0 + frobenius_norm(a)));
    }

    TEST_CASE("spectral norm basics") {
        CHECK(spectral::spectral_norm(identity({2, 2})) == doctest::Approx(1.0));
        generate::Rng rng(211);
        Tensor a = generate::random_square({2, 2}, rng);
        const double nrm = spectral::spectral_norm(a);
        for (int rep = 0; rep < 10; ++rep) {
            Tensor x = generate::random_unit({2, 2}, rng);
            CHECK(frobenius_norm(einstein_product(a, x, 2)) <= nrm + 1e-12);
        }
        Tensor u = generate::random_unitary({2, 2}, rng);
        for (double s : spectral::singular_values(u))
            CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
    }

    TEST_CASE("inverse of the diagonal fixture has reciprocal entries") {
        Tensor inv = spectral::inverse(fixtures::diag6_real());
        DenseMatrix m = unfold(inv);
        const double expect[6] = {0.5, 1.0, 1.0 / 3.0, -1.0, 0.125, 1.0 / 9.0};
        for (std::size_t r = 0; r < 6; ++r)
            for (std::size_t c = 0; c < 6; ++c) {
                if (r == c)
                    CHECK(m.at(r, c).real() == doctest::Approx(expect[r]).epsilon(1e-12));
                else
                    CHECK(std::abs(m.at(r, c)) <= 1e-12);
            }
        CHECK(tensor_diff(spectral::inverse(identity({2, 2})), identity({2, 2})) <= 1e-14);
        CHECK_THROWS_AS(spectral::inverse(fixtures::ones_row()), numerical_error);
    }

    TEST_CASE("inverse multiplies back to the identity") {
        generate::Rng rng(213);
        Tensor a = generate::random_square({3, 2}, rng);
        Tensor inv = spectral::inverse(a);
        Tensor eye = identity({3, 2});
        CHECK(frobenius_norm(linear_combine(1.0, einstein_product(a, inv, 2), -1.0, eye)) <= 1e-8);
        CHECK(frobenius_norm(linear_combine(1.0, einstein_product(inv, a, 2), -1.0, eye)) <= 1e-8);
    }

    TEST_CASE("polar decomposition") {
        generate::Rng rng(217);

        SUBCASE("unitary input gives itself and the identity") {
            Tensor u = generate::random_unitary({2, 2}, rng);
            spectral::PolarFactors pf = spectral::polar_decompose(u);
            CHECK(tensor_diff(pf.unitary, u) <= 1e-10);
            CHECK(tensor_diff(pf.positive, identity({2, 2})) <= 1e-10);
        }

        SUBCASE("random invertible input reconstructs") {
            Tensor a = generate::random_square({3, 2}, rng);
            spectral::PolarFactors pf = spectral::polar_decompose(a);
            Tensor rec = einstein_product(pf.unitary, pf.positive, 2);
            CHECK(frobenius_norm(linear_combine(1.0, rec, -1.0, a)) <=
                  1e-10 * (1.0 + frobenius_norm(a)));
            Tensor gram = einstein_product(conj_transpose(pf.unitary), pf.unitary, 2);
            CHECK(frobenius_norm(linear_combine(1.0, gram, -1.0, identity({3, 2}))) <= 1e-10);

            std::vector<scalar> pe = spectral::hermitian_eigensystem(pf.positive).values;
            std::vector<double> sv = spectral::singular_values(a);
            for (std::size_t k = 0; k < sv.size(); ++k)
                CHECK(pe[k].real() == doctest::Approx(sv[k]).epsilon(1e-10));
        }

        SUBCASE("singular input is rejected") {
            CHECK_THROWS_AS(spectral::polar_decompose(fixtures::ones_row()), numerical_error);
        }
    }

    TEST_CASE("direct sum spectra are unions") {
        Tensor d = fixtures::diag6_real();
        spectral::Spectrum s = spectral::eigenvalues(direct_sum(d, d));
        std::vector<scalar> expect = {{-1, 0}, {-1, 0}, {1, 0}, {1, 0}, {2, 0}, {2, 0},
                                      {3, 0},  {3, 0},  {8, 0}, {8, 0}, {9, 0}, {9, 0}};
        CHECK(match(s.values, expect, 1e-10));
    }
}
