#include "rbd/intmat.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <random>

using namespace rbd;

TEST_SUITE_BEGIN("intmat");

namespace {

IntMat random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo = -8,
                     long hi = 8) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

// Random unimodular matrix as a product of elementary row operations.
IntMat random_unimodular(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> f(-3, 3);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    IntMat u = IntMat::identity(n);
    for (int step = 0; step < 20; ++step) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j) continue;
        u.add_row(i, j, Int(f(rng)));
        if (step % 7 == 0) u.swap_rows(i, j);
    }
    return u;
}

}  // namespace

TEST_CASE("determinant agrees with rational elimination on random matrices") {
    std::mt19937_64 rng(14);
    for (std::size_t n = 1; n <= 6; ++n)
        for (int t = 0; t < 20; ++t) {
            IntMat m = random_matrix(rng, n, n);
            CHECK(Rat(det(m)) == fixtures::oracle_det(m));
        }
    CHECK(det(IntMat(0, 0)) == 1);
    CHECK_THROWS_AS(det(IntMat(2, 3)), std::invalid_argument);
}

TEST_CASE("smith transforms diagonalize rectangular matrices too") {
    std::mt19937_64 rng(15);
    for (auto [r, c] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 5}, {5, 3}, {4, 4}})
        for (int t = 0; t < 10; ++t) {
            IntMat m = random_matrix(rng, r, c);
            auto snf = smith_normal_form(m);
            IntMat lhs = snf.left * m * snf.right;
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) {
                    Int want = (i == j && i < snf.diagonal.size()) ? snf.diagonal[i] : Int(0);
                    CHECK(lhs(i, j) == want);
                }
            // ascending divisibility, zeros last
            for (std::size_t i = 0; i + 1 < snf.diagonal.size(); ++i) {
                if (sgn(snf.diagonal[i + 1]) == 0) continue;
                CHECK(sgn(snf.diagonal[i]) != 0);
                CHECK(divisible(snf.diagonal[i + 1], snf.diagonal[i]));
            }
            // the transforms are unimodular
            CHECK(abs(det(snf.left)) == 1);
            CHECK(abs(det(snf.right)) == 1);
        }
}

TEST_CASE("row Hermite form is invariant under unimodular row mixing") {
    std::mt19937_64 rng(16);
    for (int t = 0; t < 15; ++t) {
        IntMat m = random_matrix(rng, 4, 6, -5, 5);
        IntMat u = random_unimodular(rng, 4);
        CHECK(hnf_rows(m) == hnf_rows(u * m));
    }
}

TEST_CASE("kernel basis is exact, complete and saturated") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 25; ++t) {
        IntMat a = random_matrix(rng, 3, 6, -4, 4);
        IntMat k = kernel_basis(a);
        CHECK(k.rows() + rank(a) == a.cols());
        // every basis row maps to zero
        for (std::size_t i = 0; i < k.rows(); ++i) {
            std::vector<Int> v(k.cols());
            for (std::size_t j = 0; j < k.cols(); ++j) v[j] = k(i, j);
            for (const Int& x : a * v) CHECK(sgn(x) == 0);
        }
        // membership in the row span is equivalent to lying in the kernel
        std::uniform_int_distribution<long> dist(-6, 6);
        for (int s = 0; s < 10; ++s) {
            std::vector<Int> v(a.cols());
            for (auto& x : v) x = dist(rng);
            bool in_kernel = true;
            for (const Int& x : a * v) in_kernel = in_kernel && sgn(x) == 0;
            CHECK(in_span(k, v) == in_kernel);
        }
    }
}

TEST_CASE("span membership checks divisibility, not just direction") {
    IntMat basis(1, 2);
    basis(0, 0) = 2;
    CHECK(in_span(basis, {Int(2), Int(0)}));
    CHECK(in_span(basis, {Int(-4), Int(0)}));
    CHECK_FALSE(in_span(basis, {Int(1), Int(0)}));
    CHECK_FALSE(in_span(basis, {Int(0), Int(1)}));
}

TEST_CASE("adjugate satisfies adj(m) * m = det(m) * I") {
    std::mt19937_64 rng(18);
    for (int t = 0; t < 15; ++t) {
        IntMat m = random_matrix(rng, 4, 4, -5, 5);
        if (sgn(det(m)) == 0) continue;
        IntMat prod = adjugate(m) * m;
        Int d = det(m);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) CHECK(prod(i, j) == (i == j ? d : Int(0)));
    }
    IntMat singular(2, 2);
    singular(0, 0) = 1;
    singular(0, 1) = 2;
    singular(1, 0) = 2;
    singular(1, 1) = 4;
    CHECK_THROWS_AS(adjugate(singular), std::invalid_argument);
}

TEST_SUITE_END();
