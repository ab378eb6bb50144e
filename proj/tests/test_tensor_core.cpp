#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "tenrange/dense.hpp"
#include "tenrange/generate.hpp"
#include "tenrange/tensor.hpp"

using namespace tenrange;

namespace {

double max_diff(const Tensor& a, const Tensor& b) {
    REQUIRE(a.shape() == b.shape());
    double m = 0;
    for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

}  // namespace

TEST_SUITE("tensor_core") {
    TEST_CASE("build_tensor validates shape, length, and finiteness") {
        Tensor eye({2, 2}, 1, {1, 0, 0, 1});
        CHECK(eye.at({1, 1}) == scalar(1.0));
        CHECK(eye.at({1, 2}) == scalar(0.0));
        CHECK(eye.is_square());

        CHECK_THROWS_AS(Tensor({2, 2}, 1, {1, 0, 0}), std::invalid_argument);
        CHECK_THROWS_AS(Tensor({2, 0}, 1, {}), std::invalid_argument);
        CHECK_THROWS_AS(Tensor({2}, 3, {1, 2}), std::invalid_argument);
        const double inf = std::numeric_limits<double>::infinity();
        CHECK_THROWS_AS(Tensor({2}, 1, {scalar(inf, 0), 0}), std::invalid_argument);
        CHECK_THROWS_AS(Tensor({2}, 1, {scalar(0, std::nan("")), 0}), std::invalid_argument);
    }

    TEST_CASE("worked 2x3x3 tensor entries read off the slice tables") {
        Tensor a = fixtures::contraction_lhs();
        CHECK(a.at({1, 2, 1}) == scalar(-5.0));
        CHECK(a.at({2, 3, 2}) == scalar(7.0));
        CHECK(a.at({1, 1, 3}) == scalar(3.0));
    }

    TEST_CASE("einstein product reproduces both worked contractions") {
        Tensor a = fixtures::contraction_lhs();
        Tensor b = fixtures::contraction_rhs();

        Tensor d = einstein_product(a, b, 2);
        CHECK(d.shape() == Shape{2, 2});
        CHECK(d.at({1, 1}) == scalar(44.0));
        CHECK(d.at({1, 2}) == scalar(64.0));
        CHECK(d.at({2, 1}) == scalar(62.0));
        CHECK(d.at({2, 2}) == scalar(5.0));

        Tensor c = einstein_product(a, b, 1);
        CHECK(c.shape() == Shape{2, 3, 3, 2});
        // full slice table c(:,:,k,l), rows i, columns j
        const double table[3][2][2][3] = {
            {{{22, 5, 12}, {9, 13, 21}}, {{-8, -32, 12}, {-4, -4, -24}}},
            {{{37, 13, 17}, {15, 22, 38}}, {{12, -15, 12}, {3, 9, 3}}},
            {{{37, -9, 22}, {12, 25, 28}}, {{19, 3, 9}, {7, 12, 18}}}};
        for (std::size_t k = 1; k <= 3; ++k)
            for (std::size_t l = 1; l <= 2; ++l)
                for (std::size_t i = 1; i <= 2; ++i)
                    for (std::size_t j = 1; j <= 3; ++j)
                        CHECK(c.at({i, j, k, l}) ==
                              scalar(table[k - 1][l - 1][i - 1][j - 1]));
    }

    TEST_CASE("einstein product rejects mismatched contraction blocks") {
        Tensor a = zeros({2, 3, 3}, 1);
        Tensor b = zeros({2, 3, 2}, 1);
        CHECK_THROWS_AS(einstein_product(a, b, 2), std::invalid_argument);
    }

    TEST_CASE("identity is neutral for the einstein product") {
        generate::Rng rng(7);
        Tensor x = generate::random_tensor({2, 2}, 2, rng);
        Tensor eye = identity({2, 2});
        CHECK(max_diff(einstein_product(eye, x, 2), x) == 0.0);

        Tensor sq = generate::random_square({2, 2}, rng);
        CHECK(max_diff(einstein_product(eye, sq, 2), sq) == 0.0);
        CHECK(max_diff(einstein_product(sq, eye, 2), sq) == 0.0);
    }

    TEST_CASE("einstein product agrees with the brute-force reference") {
        generate::Rng rng(11);
        for (int rep = 0; rep < 10; ++rep) {
            Tensor a = generate::random_tensor({2, 2, 2, 2}, 2, rng);
            Tensor b = generate::random_tensor({2, 2, 2, 2}, 2, rng);
            for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{3}}) {
                Tensor fast = einstein_product(a, b, n);
                Tensor ref = reference::einstein_product(a, b, n);
                CHECK(max_diff(fast, ref) <= 1e-12);
            }
        }
    }

    TEST_CASE("pi-transpose follows the index relabeling convention") {
        generate::Rng rng(3);
        Tensor a = generate::random_tensor({2, 3, 4}, 1, rng);
        Tensor t = pi_transpose(a, Permutation({2, 1, 3}));
        CHECK(t.shape() == Shape{3, 2, 4});
        CHECK(t.at({2, 1, 1}) == a.at({1, 2, 1}));
        CHECK(t.at({3, 2, 4}) == a.at({2, 3, 4}));

        SUBCASE("inverse permutation restores the tensor exactly") {
            Permutation pi({3, 1, 2});
            Tensor back = pi_transpose(pi_transpose(a, pi), pi.inverse());
            CHECK(max_diff(back, a) == 0.0);
        }

        SUBCASE("entrywise remap oracle on a 2x3x2 tensor") {
            Tensor small = generate::random_tensor({2, 3, 2}, 1, rng);
            Permutation pi({2, 3, 1});
            Tensor tr = pi_transpose(small, pi);
            for (std::size_t i1 = 1; i1 <= 2; ++i1)
                for (std::size_t i2 = 1; i2 <= 3; ++i2)
                    for (std::size_t i3 = 1; i3 <= 2; ++i3)
                        CHECK(tr.at({i2, i3, i1}) == small.at({i1, i2, i3}));
        }

        CHECK_THROWS_AS(pi_transpose(a, Permutation({2, 1})), std::invalid_argument);
        CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
    }

    TEST_CASE("conjugate transpose is an involution and the adjoint") {
        generate::Rng rng(5);
        Tensor a = generate::random_tensor({3, 2, 3, 2}, 2, rng);
        CHECK(max_diff(conj_transpose(conj_transpose(a)), a) == 0.0);

        Tensor d = fixtures::diag6_complex();
        Tensor dh = conj_transpose(d);
        CHECK(dh.at({1, 1, 1, 1}) == scalar(1.0, -1.0));

        Tensor x = generate::random_unit({3, 2}, rng);
        Tensor y = generate::random_unit({3, 2}, rng);
        scalar lhs = inner_product(einstein_product(a, x, 2), y);
        scalar rhs = inner_product(x, einstein_product(conj_transpose(a), y, 2));
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + frobenius_norm(a)));
    }

    TEST_CASE("inner product and frobenius norm") {
        std::vector<scalar> uniform(6, scalar(1.0 / std::sqrt(6.0), 0.0));
        Tensor x({3, 2}, 2, uniform);
        CHECK(std::abs(inner_product(x, x) - scalar(1.0)) <= 1e-15);
        CHECK(std::abs(frobenius_norm(x) - 1.0) <= 1e-15);
        CHECK(frobenius_norm(zeros({3, 2}, 2)) == 0.0);

        generate::Rng rng(13);
        Tensor u = generate::random_tensor({3, 2}, 2, rng);
        Tensor v = generate::random_tensor({3, 2}, 2, rng);
        CHECK(inner_product(u, v) == std::conj(inner_product(v, u)));
        CHECK(std::abs(inner_product(u, u) - scalar(std::pow(frobenius_norm(u), 2))) <=
              1e-12 * (1.0 + frobenius_norm(u)));
        const scalar alpha{0.3, -1.2};
        CHECK(std::abs(frobenius_norm(scale(alpha, u)) - std::abs(alpha) * frobenius_norm(u)) <=
              1e-12);
        CHECK_THROWS_AS(inner_product(u, zeros({2, 3}, 2)), std::invalid_argument);
    }

    TEST_CASE("linear combine and the hermitian decomposition") {
        generate::Rng rng(17);
        Tensor a = generate::random_square({3, 2}, rng);
        Tensor b = generate::random_square({3, 2}, rng);
        CHECK(max_diff(linear_combine(1.0, a, 0.0, b), a) == 0.0);
        CHECK(frobenius_norm(linear_combine(0.0, a, 0.0, b)) == 0.0);
        CHECK_THROWS_AS(linear_combine(1.0, a, 1.0, zeros({2, 2}, 1)), std::invalid_argument);

        Tensor h = hermitian_part(a), s = skew_hermitian_part(a);
        CHECK(is_hermitian(h));
        CHECK(max_diff(linear_combine(1.0, h, 1.0, s), a) <= 1e-15 * (1.0 + frobenius_norm(a)));
        Tensor herm = generate::random_hermitian({3, 2}, rng);
        CHECK(max_diff(hermitian_part(herm), herm) <= 1e-15 * (1.0 + frobenius_norm(herm)));
        CHECK(frobenius_norm(skew_hermitian_part(herm)) <= 1e-15 * (1.0 + frobenius_norm(herm)));
        CHECK_THROWS_AS(hermitian_part(zeros({2, 3}, 1)), std::invalid_argument);
    }

    TEST_CASE("outer product builds rank-one blocks") {
        generate::Rng rng(23);
        Tensor u = generate::random_unit({2, 2}, rng);
        Tensor p = outer_product(u, u);
        CHECK(max_diff(einstein_product(p, p, 2), p) <= 1e-12);

        Tensor e1 = zeros({2, 2}, 2), e2 = zeros({2, 2}, 2);
        {
            std::vector<scalar> v1(4), v2(4);
            v1[0] = 1.0;
            v2[1] = 1.0;
            e1 = Tensor({2, 2}, 2, v1);
            e2 = Tensor({2, 2}, 2, v2);
        }
        Tensor b12 = outer_product(e1, e2);
        std::size_t nonzero = 0;
        for (std::size_t k = 0; k < b12.size(); ++k)
            if (b12[k] != scalar(0.0)) ++nonzero;
        CHECK(nonzero == 1);
        CHECK(b12.at({1, 1, 1, 2}) == scalar(1.0));

        Tensor v = generate::random_unit({2, 2}, rng);
        Tensor x = generate::random_tensor({2, 2}, 2, rng);
        Tensor lhs = einstein_product(outer_product(u, v), x, 2);
        Tensor rhs = scale(inner_product(x, v), u);
        CHECK(max_diff(lhs, rhs) <= 1e-12);
    }

    TEST_CASE("direct sum concatenates blocks diagonally") {
        Tensor eye = identity({2, 2});
        Tensor dsum = direct_sum(eye, eye);
        CHECK(dsum.shape() == Shape{4, 2, 4, 2});
        CHECK(max_diff(dsum, identity({4, 2})) == 0.0);

        CHECK_THROWS_AS(direct_sum(eye, identity({2, 3})), std::invalid_argument);
        CHECK_THROWS_AS(direct_sum(eye, zeros({2, 2, 2}, 1)), std::invalid_argument);
    }

    TEST_CASE("einstein product is associative on conformable triples") {
        generate::Rng rng(29);
        for (int rep = 0; rep < 5; ++rep) {
            Tensor a = generate::random_tensor({2, 3}, 1, rng);
            Tensor b = generate::random_tensor({3, 2, 2}, 1, rng);
            Tensor c = generate::random_tensor({2, 2, 3}, 2, rng);
            Tensor left = einstein_product(einstein_product(a, b, 1), c, 2);
            Tensor right = einstein_product(a, einstein_product(b, c, 2), 1);
            CHECK(max_diff(left, right) <= 1e-12);
        }
    }

    TEST_CASE("operations do not mutate their inputs") {
        generate::Rng rng(31);
        Tensor a = generate::random_square({2, 2}, rng);
        const std::vector<scalar> snapshot = a.entries();
        (void)einstein_product(a, a, 2);
        (void)conj_transpose(a);
        (void)hermitian_part(a);
        (void)scale(scalar(2.0), a);
        CHECK(a.entries() == snapshot);
    }
}
