#include "doctest.h"

#include <cstdlib>

#include "loomgen/poly.hpp"
#include "test_helpers.hpp"

using namespace loomgen;

TEST_CASE("parse_system fixtures") {
    SUBCASE("running example 1") {
        auto sys = parse_system("vars x y z; x^2 - y; x^3 - z;");
        CHECK(sys.vars == std::vector<std::string>{"x", "y", "z"});
        REQUIRE(sys.polys.size() == 2);
        CHECK(sys.polys[0].to_string(sys.vars) == "x^2 - y");
        CHECK(sys.polys[1].to_string(sys.vars) == "x^3 - z");
    }
    SUBCASE("empty system is legal") {
        auto sys = parse_system("vars x;");
        CHECK(sys.vars == std::vector<std::string>{"x"});
        CHECK(sys.polys.empty());
    }
    SUBCASE("literal scalar binomial") {
        auto sys = parse_system("vars x y; 3x - 3y;");
        REQUIRE(sys.polys.size() == 1);
        CHECK(sys.polys[0].to_string(sys.vars) == "3 x - 3 y");
    }
    SUBCASE("juxtaposed variables and comments") {
        auto sys = parse_system("vars x y; # generators\nx^3y - xy^3;\n");
        REQUIRE(sys.polys.size() == 1);
        Polynomial expected(2);
        expected.add_term({3, 1}, Rat(1));
        expected.add_term({1, 3}, Rat(-1));
        CHECK(sys.polys[0] == expected);
    }
    SUBCASE("fractional coefficients") {
        auto sys = parse_system("vars x; 3/2 x^2 - 1/2;");
        CHECK(sys.polys[0].evaluate({Rat(2)}) == Rat(11, 2));
    }
}

TEST_CASE("parse_system errors") {
    CHECK_THROWS_AS(parse_system("x^2 - y;"), ParseError);
    CHECK_THROWS_AS(parse_system("vars x y; x - w;"), UnknownVariable);
    CHECK_THROWS_AS(parse_system("vars x; x^2 - "), ParseError);
    CHECK_THROWS_AS(parse_system("vars x; x $ y;"), ParseError);
    CHECK_THROWS_AS(parse_system("vars x; x^99999999999999999999;"), ParseError);
    SUBCASE("error carries position") {
        try {
            parse_system("vars x y;\nx - w;");
            FAIL("expected UnknownVariable");
        } catch (const UnknownVariable& e) {
            CHECK(std::string(e.what()).find("2:5") != std::string::npos);
        }
    }
    SUBCASE("LOOMGEN_MAX_EXP caps exponents") {
        setenv("LOOMGEN_MAX_EXP", "10", 1);
        CHECK_THROWS_AS(parse_system("vars x; x^11 - 1;"), ParseError);
        CHECK_NOTHROW(parse_system("vars x; x^10 - 1;"));
        unsetenv("LOOMGEN_MAX_EXP");
    }
}

TEST_CASE("classify_pure_difference") {
    SUBCASE("x^3 y - x y^3") {
        auto sys = parse_system("vars x y; x^3y - xy^3;");
        auto b = classify_pure_difference(sys.polys[0]);
        CHECK(b.alpha == Monomial{3, 1});
        CHECK(b.beta == Monomial{1, 3});
    }
    SUBCASE("three terms rejected") {
        auto sys = parse_system("vars x y; x^2 - y + 1;");
        CHECK_THROWS_AS(classify_pure_difference(sys.polys[0]), NotPureDifference);
    }
    SUBCASE("mismatched coefficients rejected") {
        auto sys = parse_system("vars x y; 2x - 3y;");
        CHECK_THROWS_AS(classify_pure_difference(sys.polys[0]), NotPureDifference);
    }
    SUBCASE("scalar stripped and orientation normalised") {
        auto sys = parse_system("vars x y; 2y - 2x;");
        auto b = classify_pure_difference(sys.polys[0]);
        CHECK(b.alpha == Monomial{1, 0});
        CHECK(b.beta == Monomial{0, 1});
    }
    SUBCASE("accepted polynomials are scalar multiples of the binomial") {
        auto sys = parse_system("vars x y z; -5x^2z + 5y z^3;");
        auto b = classify_pure_difference(sys.polys[0]);
        const Rat c = sys.polys[0].terms().at(b.alpha);
        Polynomial scaled = Polynomial::constant(3, c) * b.to_polynomial();
        CHECK(scaled == sys.polys[0]);
    }
}

TEST_CASE("exponent vectors and canonical binomials") {
    auto sys = parse_system("vars x y z; x^2 - y;");
    auto b = classify_pure_difference(sys.polys[0]);
    CHECK(exponent_vector(b) == ExponentVector{2, -1, 0});

    CHECK(exponent_vector({{3, 1}, {1, 3}}) == ExponentVector{2, -2});
    CHECK(exponent_vector({{1, 0}, {0, 1}}) == ExponentVector{1, -1});

    SUBCASE("canonical binomial of (2,-2) is x^2 - y^2") {
        auto c = canonical_binomial({2, -2});
        CHECK(c.alpha == Monomial{2, 0});
        CHECK(c.beta == Monomial{0, 2});
        CHECK(is_canonical(c));
    }
    SUBCASE("canonical binomial of (2,-1,0)") {
        auto c = canonical_binomial({2, -1, 0});
        CHECK(c.alpha == Monomial{2, 0, 0});
        CHECK(c.beta == Monomial{0, 1, 0});
    }
    SUBCASE("beta = 0 means the constant 1") {
        auto c = canonical_binomial({1, 0});
        CHECK(c.alpha == Monomial{1, 0});
        CHECK(c.beta == Monomial{0, 0});
        CHECK(c.to_polynomial().evaluate({Rat(1), Rat(7)}) == 0);
    }
    CHECK_THROWS_AS(canonical_binomial({0, 0}), ZeroVector);
}

TEST_CASE("is_primitive") {
    CHECK(is_primitive({2, -1, 0}));
    CHECK_FALSE(is_primitive({2, -2}));
    CHECK(is_primitive({1, -1}));
    CHECK_THROWS_AS(is_primitive({0, 0, 0}), ZeroVector);
}

TEST_CASE("evaluate") {
    auto sys = parse_system("vars x y; x^2 - y;");
    CHECK(sys.polys[0].evaluate({Rat(2), Rat(4)}) == 0);
    CHECK(sys.polys[0].evaluate({Rat(3), Rat(4)}) == 5);
    auto sys2 = parse_system("vars x y; x^3y - xy^3;");
    CHECK(sys2.polys[0].evaluate({Rat(1), Rat(1)}) == 0);
    CHECK_THROWS_AS(sys.polys[0].evaluate({Rat(1)}), DimensionMismatch);
}

TEST_CASE("canonical binomial round trips") {
    std::mt19937 rng(20240803);
    for (int rep = 0; rep < 300; ++rep) {
        std::size_t d = 1 + rng() % 4;
        auto v = testing::random_exponent_vector(rng, d, -5, 5);
        if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) continue;
        auto b = canonical_binomial(v);
        CHECK(exponent_vector(b) == v);
        // Any binomial with this vector canonicalises to the same vector.
        Monomial shift(d);
        for (auto& x : shift) x = rng() % 3;
        Monomial alpha = b.alpha, beta = b.beta;
        for (std::size_t i = 0; i < d; ++i) { alpha[i] += shift[i]; beta[i] += shift[i]; }
        CHECK(exponent_vector(canonical_binomial(exponent_vector({alpha, beta}))) ==
              exponent_vector({alpha, beta}));
    }
}

TEST_CASE("print then parse is a fixed point") {
    std::mt19937 rng(20240804);
    std::vector<std::string> vars = {"x", "y", "z"};
    for (int rep = 0; rep < 200; ++rep) {
        Polynomial p(3);
        std::size_t terms = 1 + rng() % 4;
        for (std::size_t t = 0; t < terms; ++t) {
            Monomial m(3);
            for (auto& e : m) e = rng() % 4;
            long num = static_cast<long>(rng() % 9) - 4;
            long den = 1 + rng() % 3;
            Rat c(num, den);
            c.canonicalize();
            p.add_term(m, c);
        }
        if (p.is_zero()) continue;
        std::string text = "vars x y z; " + p.to_string(vars) + ";";
        auto sys = parse_system(text);
        REQUIRE(sys.polys.size() == 1);
        CHECK(sys.polys[0] == p);
        CHECK(sys.polys[0].to_string(vars) == p.to_string(vars));
    }
}
