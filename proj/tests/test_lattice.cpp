#include "doctest.h"

#include "loomgen/lattice.hpp"
#include "test_helpers.hpp"

using namespace loomgen;
using namespace loomgen::testing;

TEST_CASE("lattice_from_vectors") {
    SUBCASE("rank-2 lattice in Z^3") {
        auto l = lattice_from_vectors({{2, -1, 0}, {3, 0, -1}}, 3);
        CHECK(l.rank() == 2);
        CHECK(l.dim == 3);
    }
    SUBCASE("empty generator list gives the zero lattice") {
        auto l = lattice_from_vectors({}, 2);
        CHECK(l.rank() == 0);
        CHECK(l.basis.rows() == 0);
    }
    SUBCASE("dependent generators collapse") {
        auto l = lattice_from_vectors({{2, -2}, {1, -1}}, 2);
        CHECK(l.rank() == 1);
        CHECK(l.basis == int_matrix({{1, -1}}));
    }
    CHECK_THROWS_AS(lattice_from_vectors({{1, 2, 3}}, 2), DimensionMismatch);
}

TEST_CASE("saturate fixtures") {
    SUBCASE("span{(2,-2)} saturates to span{(1,-1)}") {
        auto cert = saturate(lattice_from_vectors({{2, -2}}, 2));
        CHECK(cert.a == int_matrix({{1, 1}}));
        CHECK(cert.saturated.basis == int_matrix({{1, -1}}));
        // Definitional oracle over small vectors.
        for_each_small_vector(2, 4, [&](const ExponentVector& v) {
            CHECK(contains(cert.saturated, v) == in_saturation_oracle(cert.original, v));
        });
    }
    SUBCASE("example 1 lattice is already saturated") {
        auto l = lattice_from_vectors({{2, -1, 0}, {3, 0, -1}}, 3);
        auto cert = saturate(l);
        CHECK(cert.a == int_matrix({{1, 2, 3}}));
        CHECK(cert.saturated == l);
    }
    SUBCASE("zero lattice is saturated, A is the identity") {
        auto cert = saturate(lattice_from_vectors({}, 2));
        CHECK(cert.a == IntMatrix::identity(2));
        CHECK(cert.saturated.rank() == 0);
    }
}

TEST_CASE("contains") {
    auto span11 = lattice_from_vectors({{1, -1}}, 2);
    CHECK(contains(span11, {3, -3}));
    auto span22 = lattice_from_vectors({{2, -2}}, 2);
    CHECK(contains(span22, {2, -2}));
    CHECK_FALSE(contains(span22, {1, -1}));
    auto l = lattice_from_vectors({{2, -1, 0}, {3, 0, -1}}, 3);
    CHECK_FALSE(contains(l, {1, 2, 3}));
    CHECK_THROWS_AS(contains(l, {1, 2}), DimensionMismatch);
}

TEST_CASE("is_saturated") {
    CHECK_FALSE(is_saturated(lattice_from_vectors({{2, -2}}, 2)));
    CHECK(is_saturated(lattice_from_vectors({{1, -1}}, 2)));
    CHECK(is_saturated(lattice_from_vectors({{1, 0}, {0, 1}}, 2)));
}

TEST_CASE("saturation properties on random lattices") {
    std::mt19937 rng(20240805);
    for (int rep = 0; rep < 150; ++rep) {
        std::size_t d = 1 + rng() % 3;
        std::size_t gens = rng() % 4;
        std::vector<ExponentVector> vs;
        for (std::size_t g = 0; g < gens; ++g)
            vs.push_back(random_exponent_vector(rng, d, -3, 3));
        Lattice l = lattice_from_vectors(vs, d);
        auto cert = saturate(l);

        CHECK(cert.original.rank() == cert.saturated.rank());
        // L is contained in Sat(L).
        for (std::size_t i = 0; i < l.basis.rows(); ++i) {
            ExponentVector row(d);
            for (std::size_t j = 0; j < d; ++j) row[j] = l.basis(i, j).get_si();
            CHECK(contains(cert.saturated, row));
        }
        // A annihilates the saturated basis.
        for (std::size_t i = 0; i < cert.saturated.basis.rows(); ++i) {
            auto av = mat_vec(cert.a, cert.saturated.basis.row(i));
            for (const Int& x : av) CHECK(x == 0);
        }
        // Idempotence.
        auto cert2 = saturate(cert.saturated);
        CHECK(cert2.saturated == cert.saturated);
        // Full-rank sentinel equivalence.
        CHECK((l.rank() == d) == (cert.a == IntMatrix(1, d)));

        // Membership in Sat(L) agrees with the definitional oracle.
        for_each_small_vector(d, 4, [&](const ExponentVector& v) {
            bool via_a = true;
            std::vector<Int> iv(d);
            for (std::size_t j = 0; j < d; ++j) iv[j] = v[j];
            for (const Int& x : mat_vec(cert.a, iv))
                if (x != 0) via_a = false;
            CHECK(via_a == in_saturation_oracle(l, v));
        });
    }
}
