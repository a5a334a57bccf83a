#include "doctest.h"

#include "loomgen/lattice.hpp"
#include "loomgen/matrix.hpp"
#include "test_helpers.hpp"

using namespace loomgen;
using namespace loomgen::testing;

TEST_CASE("rational null space basis fixtures") {
    SUBCASE("two rows in Z^3") {
        auto b = int_matrix({{2, -1, 0}, {3, 0, -1}});
        CHECK(rational_null_space_basis(b) == int_matrix({{1, 2, 3}}));
    }
    SUBCASE("zero row yields identity basis") {
        IntMatrix b(1, 3);
        CHECK(rational_null_space_basis(b) == IntMatrix::identity(3));
    }
    SUBCASE("orthogonal complement of (1,-1) is (1,1)") {
        auto b = int_matrix({{1, -1}});
        CHECK(rational_null_space_basis(b) == int_matrix({{1, 1}}));
        // Oracle: every row of the result annihilates every multiple of (1,-1).
        for (long c = -4; c <= 4; ++c)
            CHECK(Int(1 * c + 1 * (-c)) == 0);
    }
    SUBCASE("full-rank input yields the zero-row sentinel") {
        CHECK(rational_null_space_basis(IntMatrix::identity(3)) == IntMatrix(1, 3));
    }
}

TEST_CASE("integer kernel basis fixtures") {
    SUBCASE("kernel of (1 2 3)") {
        auto k = integer_kernel_basis(int_matrix({{1, 2, 3}}));
        REQUIRE(k.rows() == 2);
        // Span equality against the rational null space intersected with Z^3,
        // by exhaustive enumeration of small vectors.
        Lattice span{3, k};
        for_each_small_vector(3, 4, [&](const ExponentVector& v) {
            bool in_null = v[0] + 2 * v[1] + 3 * v[2] == 0;
            CHECK(contains(span, v) == in_null);
        });
    }
    SUBCASE("injective map has trivial kernel") {
        auto k = integer_kernel_basis(IntMatrix::identity(4));
        CHECK(k.rows() == 0);
        CHECK(k.cols() == 4);
    }
    SUBCASE("zero map has full kernel") {
        CHECK(integer_kernel_basis(IntMatrix(1, 3)) == IntMatrix::identity(3));
    }
}

TEST_CASE("rational inverse") {
    SUBCASE("identity") {
        CHECK(rat_inverse(RatMatrix::identity(3)) == RatMatrix::identity(3));
    }
    SUBCASE("exact inverse multiplies back to identity") {
        auto s = rat_matrix({{0, 2, 0}, {1, -1, 0}, {1, 0, -1}});
        auto inv = rat_inverse(s);
        CHECK(mat_mul(s, inv) == RatMatrix::identity(3));
        CHECK(mat_mul(inv, s) == RatMatrix::identity(3));
    }
    SUBCASE("singular matrix throws") {
        CHECK_THROWS_AS(rat_inverse(rat_matrix({{1, 1}, {1, 1}})), SingularMatrix);
    }
    SUBCASE("non-square throws") {
        CHECK_THROWS_AS(rat_inverse(RatMatrix(2, 3)), DimensionMismatch);
    }
}

TEST_CASE("rank and products") {
    CHECK(rank(int_matrix({{2, -1, 0}, {3, 0, -1}})) == 2);
    CHECK(rank(IntMatrix(3, 3)) == 0);
    auto v = rat_vec({5, -7, 11});
    CHECK(mat_vec(RatMatrix::identity(3), v) == v);
    CHECK_THROWS_AS(mat_vec(RatMatrix::identity(3), rat_vec({1, 2})), DimensionMismatch);
    CHECK_THROWS_AS(mat_mul(RatMatrix(2, 3), RatMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("null space properties on random matrices") {
    std::mt19937 rng(20240801);
    for (int rep = 0; rep < 200; ++rep) {
        std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        IntMatrix b = random_int_matrix(rng, rows, cols, -5, 5);
        IntMatrix n = rational_null_space_basis(b);

        // Every result row is orthogonal to every input row.
        for (std::size_t i = 0; i < n.rows(); ++i)
            for (std::size_t k = 0; k < rows; ++k) {
                Int dot = 0;
                for (std::size_t j = 0; j < cols; ++j) dot += n(i, j) * b(k, j);
                CHECK(dot == 0);
            }

        std::size_t r = rank(b);
        if (r == cols)
            CHECK(n == IntMatrix(1, cols));
        else
            CHECK(r + n.rows() == cols);

        // Deterministic.
        CHECK(rational_null_space_basis(b) == n);
    }
}

TEST_CASE("kernel and HNF properties on random matrices") {
    std::mt19937 rng(20240802);
    for (int rep = 0; rep < 200; ++rep) {
        std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 4;
        IntMatrix a = random_int_matrix(rng, rows, cols, -5, 5);
        IntMatrix k = integer_kernel_basis(a);
        for (std::size_t i = 0; i < k.rows(); ++i) {
            auto av = mat_vec(a, k.row(i));
            for (const Int& x : av) CHECK(x == 0);
        }
        CHECK(rank(k) == k.rows());
        CHECK(hermite_normal_form(k) == k);

        IntMatrix m = random_int_matrix(rng, rows, cols, -5, 5);
        IntMatrix h = hermite_normal_form(m);
        CHECK(hermite_normal_form(h) == h);
        CHECK(rank(h) == rank(m));
    }
}
