#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "mct/errors.hpp"
#include "mct/fixtures.hpp"
#include "mct/ideal.hpp"
#include "mct/monomial.hpp"
#include "test_util.hpp"

using mct::MonomialIdeal;

TEST_CASE("parse: canonical round trip and inferred variables") {
    MonomialIdeal I = MonomialIdeal::parse("x0*x1^2, x2");
    CHECK(I.variables() == std::vector<std::string>{"x0", "x1", "x2"});
    CHECK(I.generator_count() == 2);
    CHECK(I.to_input_string() == "x2, x0*x1^2");
    CHECK_FALSE(I.is_squarefree());

    // implicit variables appear in order of first appearance
    MonomialIdeal J = MonomialIdeal::parse("b*a, c");
    CHECK(J.variables() == std::vector<std::string>{"b", "a", "c"});

    // newline separation and blank lines
    MonomialIdeal K = MonomialIdeal::parse("x*y\n\nx*z\n");
    CHECK(K.generator_count() == 2);
}

TEST_CASE("parse: explicit variable lists and x0x1-style tokens") {
    MonomialIdeal I = MonomialIdeal::parse("xy", std::vector<std::string>{"x", "y"});
    CHECK(I.generator_count() == 1);
    CHECK(I.generators()[0] == mct::Monomial::variable(2, 0) * mct::Monomial::variable(2, 1));

    // a declared variable named "xy" wins over decomposition
    MonomialIdeal J = MonomialIdeal::parse("xy", std::vector<std::string>{"x", "y", "xy"});
    CHECK(J.generators()[0] == mct::Monomial::variable(3, 2));

    CHECK_THROWS_AS(MonomialIdeal::parse("z", std::vector<std::string>{"x", "y"}), mct::error);
    CHECK_THROWS_AS(MonomialIdeal::parse("x", std::vector<std::string>{"x", "x"}), mct::error);
}

TEST_CASE("parse: strict grammar errors carry positions") {
    CHECK_THROWS_AS(MonomialIdeal::parse(""), mct::parse_error);
    CHECK_THROWS_AS(MonomialIdeal::parse("x0*x1,"), mct::parse_error);
    CHECK_THROWS_AS(MonomialIdeal::parse(",x0"), mct::parse_error);
    CHECK_THROWS_AS(MonomialIdeal::parse("x0,,x1"), mct::parse_error);
    CHECK_THROWS_AS(MonomialIdeal::parse("x0*"), mct::parse_error);
    CHECK_THROWS_AS(MonomialIdeal::parse("*x0"), mct::parse_error);
    CHECK_THROWS_AS(MonomialIdeal::parse("x0^"), mct::parse_error);
    CHECK_THROWS_AS(MonomialIdeal::parse("x0^0"), mct::parse_error);
    CHECK_THROWS_AS(MonomialIdeal::parse("x0 x1"), mct::parse_error);
    CHECK_THROWS_AS(MonomialIdeal::parse("x0 + x1"), mct::parse_error);

    try {
        MonomialIdeal::parse("x0*x1,");
        FAIL("expected parse_error");
    } catch (const mct::parse_error& e) {
        CHECK(std::string(e.what()).find("offset") != std::string::npos);
    }
}

TEST_CASE("minimalization and membership") {
    MonomialIdeal I = MonomialIdeal::parse("x0*x1, x0*x1*x2, x0*x1");
    CHECK(I.generator_count() == 1);

    MonomialIdeal T = mct::fixture("triangle");
    CHECK(T.contains(MonomialIdeal::parse("x*y*z", T.variables()).generators()[0]));
    CHECK_FALSE(T.contains(mct::Monomial::variable(3, 0)));
    CHECK(T.max_generator_degree() == 2);
}

TEST_CASE("zero and unit ideals are representable") {
    MonomialIdeal Z = MonomialIdeal::zero({"x", "y", "z"});
    CHECK(Z.is_zero());
    CHECK_FALSE(Z.is_proper_nonzero());
    MonomialIdeal U = MonomialIdeal::unit({"x", "y", "z"});
    CHECK(U.is_unit());
    CHECK_FALSE(U.is_proper_nonzero());
    CHECK(mct::fixture("triangle").is_proper_nonzero());
}

TEST_CASE("intersection of ideals") {
    MonomialIdeal A = MonomialIdeal::parse("x", std::vector<std::string>{"x", "y", "z"});
    MonomialIdeal B = MonomialIdeal::parse("y", std::vector<std::string>{"x", "y", "z"});
    MonomialIdeal AB = mct::intersect(A, B);
    CHECK(AB.to_input_string() == "x*y");

    // pairwise coordinate planes intersect to the triangle ideal
    MonomialIdeal P1 = MonomialIdeal::parse("x, y", std::vector<std::string>{"x", "y", "z"});
    MonomialIdeal P2 = MonomialIdeal::parse("x, z", std::vector<std::string>{"x", "y", "z"});
    MonomialIdeal P3 = MonomialIdeal::parse("y, z", std::vector<std::string>{"x", "y", "z"});
    MonomialIdeal I = mct::intersect(mct::intersect(P1, P2), P3);
    CHECK(I == mct::fixture("triangle"));
}

TEST_CASE("minimal primes are the inclusion-minimal covers") {
    MonomialIdeal T = mct::fixture("triangle");
    auto primes = mct::minimal_primes(T);
    REQUIRE(primes.size() == 3);
    for (const auto& P : primes) CHECK(P.size() == 2);

    auto bp = mct::minimal_primes(mct::fixture("bipartite6"));
    CHECK(bp.size() == 4);
    bool even = false, odd = false;
    for (const auto& P : bp) {
        if (P.mask == 0b010101u) even = true; // x0, x2, x4
        if (P.mask == 0b101010u) odd = true;  // x1, x3, x5
    }
    CHECK(even);
    CHECK(odd);

    // z1 is the intersection of all coordinate triples, so its minimal
    // primes are exactly the 20 triples
    auto zp = mct::minimal_primes(mct::fixture("z1"));
    CHECK(zp.size() == 20);
    for (const auto& P : zp) CHECK(P.size() == 3);
}

TEST_CASE("ideal height") {
    CHECK(mct::ideal_height(mct::fixture("triangle")) == 2);
    CHECK(mct::ideal_height(mct::fixture("reisner")) == 3);
    CHECK(mct::ideal_height(mct::fixture("principal")) == 1);
    CHECK(mct::ideal_height(mct::fixture("koszul(3)")) == 4);
    CHECK(mct::ideal_height(mct::fixture("z1")) == 3);
}

TEST_CASE("alexander duality") {
    MonomialIdeal T = mct::fixture("triangle");
    CHECK(mct::alexander_dual(T) == T); // self-dual

    // the Reisner ideal is Alexander self-dual: the complement of every
    // minimal non-face of the triangulation is a facet
    MonomialIdeal R = mct::fixture("reisner");
    CHECK(mct::alexander_dual(R) == R);

    std::mt19937_64 rng(42);
    for (int t = 0; t < 25; ++t) {
        MonomialIdeal I = mct_test::random_squarefree_ideal(rng);
        CHECK(mct::alexander_dual(mct::alexander_dual(I)) == I);
    }
}

TEST_CASE("restrict_ideal drops generators divisible by the variable") {
    MonomialIdeal T = mct::fixture("triangle");
    MonomialIdeal R = mct::restrict_ideal(T, "z");
    CHECK(R.generator_count() == 1);
    CHECK(R.to_input_string() == "x*y");
    CHECK(R.nvars() == T.nvars());

    MonomialIdeal all = mct::restrict_ideal(MonomialIdeal::parse("x*y", std::vector<std::string>{"x", "y"}), 0);
    CHECK(all.is_zero());

    CHECK_THROWS_AS(mct::restrict_ideal(T, "w"), mct::error);
}

TEST_CASE("canonical generator order is graded lex") {
    MonomialIdeal I = MonomialIdeal::parse("x2^3, x0*x2, x1^2, x0*x1",
                                           std::vector<std::string>{"x0", "x1", "x2"});
    CHECK(I.to_input_string() == "x0*x1, x0*x2, x1^2, x2^3");

    // without an explicit list, variables order by first appearance and the
    // graded-lex order follows that
    MonomialIdeal J = MonomialIdeal::parse("x2^3, x0*x2, x1^2, x0*x1");
    CHECK(J.variables() == std::vector<std::string>{"x2", "x0", "x1"});
    CHECK(J.to_input_string() == "x2*x0, x0*x1, x1^2, x2^3");
}
