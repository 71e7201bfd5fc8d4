#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "mct/errors.hpp"
#include "mct/fixtures.hpp"
#include "mct/ideal.hpp"
#include "mct/lattice.hpp"
#include "mct/monomial.hpp"
#include "test_util.hpp"

using mct::LcmLattice;
using mct::MonomialIdeal;

TEST_CASE("triangle lcm-lattice") {
    LcmLattice L = LcmLattice::build(mct::fixture("triangle"));
    CHECK(L.size() == 5);
    CHECK(L.height() == 2);
    CHECK(L.element(L.bottom()).is_one());
    CHECK(L.atoms().size() == 3);
    CHECK(L.element(L.top()).degree() == 3);

    for (int a : L.atoms()) {
        CHECK(L.height(a) == 1);
        CHECK(L.leq(L.bottom(), a));
        CHECK(L.leq(a, L.top()));
    }
    // join of two distinct atoms is the top
    CHECK(L.join(L.atoms()[0], L.atoms()[1]) == L.top());
    CHECK(L.index_of(mct::Monomial::one(3)) == 0);
    CHECK(L.index_of(mct::Monomial::variable(3, 0)) == -1);

    auto [poset, elems] = L.open_interval(L.bottom(), L.top());
    CHECK(poset.size() == 3);
    CHECK(elems.size() == 3);
    CHECK(poset.cover_pairs().empty()); // atoms form an antichain
    CHECK_THROWS_AS(L.open_interval(L.top(), L.bottom()), mct::error);
}

TEST_CASE("koszul lattices are Boolean") {
    LcmLattice L2 = LcmLattice::build(mct::fixture("koszul(2)"));
    CHECK(L2.size() == 8);
    CHECK(L2.height() == 3);
    LcmLattice L3 = LcmLattice::build(mct::fixture("koszul(3)"));
    CHECK(L3.size() == 16);
    CHECK(L3.height() == 4);
    // heights equal support sizes
    for (int i = 0; i < L3.size(); ++i) CHECK(L3.height(i) == L3.element(i).support_size());
}

TEST_CASE("reisner and z1 lattice shapes") {
    LcmLattice R = LcmLattice::build(mct::fixture("reisner"));
    CHECK(R.size() == 33); // 1 + 10 cubics + 15 quartics + 6 quintics + 1 top
    CHECK(R.height() == 4);

    LcmLattice Z = LcmLattice::build(mct::fixture("z1"));
    CHECK(Z.size() == 23); // 1 + 15 quartics + 6 quintics + 1 top
    CHECK(Z.height() == 3);
}

TEST_CASE("lattice rejects improper ideals and enforces the cap") {
    CHECK_THROWS_AS(LcmLattice::build(MonomialIdeal::zero({"x", "y"})), mct::error);
    CHECK_THROWS_AS(LcmLattice::build(MonomialIdeal::unit({"x", "y"})), mct::error);
    CHECK_THROWS_AS(LcmLattice::build(mct::fixture("koszul(4)"), 8), mct::size_error);
}

TEST_CASE("lattice element order is canonical and heights are monotone") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        MonomialIdeal I = mct_test::random_ideal(rng);
        LcmLattice L = LcmLattice::build(I);
        for (int i = 1; i < L.size(); ++i)
            CHECK(mct::canonical_less(L.element(i - 1), L.element(i)));
        for (int i = 0; i < L.size(); ++i) {
            for (int j = 0; j < L.size(); ++j) {
                if (L.leq(i, j)) {
                    CHECK(L.element(i).divides(L.element(j)));
                    if (i != j) CHECK(L.height(i) < L.height(j));
                }
            }
        }
        CHECK(L.atoms().size() == static_cast<std::size_t>(I.generator_count()));
    }
}

TEST_CASE("intersection lattice of the triangle arrangement") {
    mct::IntersectionLattice A = mct::IntersectionLattice::build(mct::fixture("triangle"));
    CHECK(A.nvars() == 3);
    CHECK(A.size() == 4); // three lines and the origin
    CHECK(A.maximal_elements().size() == 3);

    int origin = -1;
    for (int i = 0; i < A.size(); ++i)
        if (A.vanishing_mask(i) == 0b111u) origin = i;
    REQUIRE(origin >= 0);
    CHECK(A.subspace_dim(origin) == 0);
    for (int m : A.maximal_elements()) {
        CHECK(A.subspace_dim(m) == 1);
        CHECK(A.leq(origin, m));
        CHECK_FALSE(A.leq(m, origin));
    }
    auto [up, elems] = A.strict_upper(origin);
    CHECK(up.size() == 3);
    CHECK(up.cover_pairs().empty());
    CHECK(elems.size() == 3);
}

TEST_CASE("duality: intersection lattice embeds in the dual lcm-lattice") {
    for (const char* name : {"triangle", "bipartite6", "reisner", "z1"}) {
        MonomialIdeal I = mct::fixture(name);
        mct::IntersectionLattice A = mct::IntersectionLattice::build(I);
        LcmLattice D = LcmLattice::build(mct::alexander_dual(I));
        auto mu = mct::duality_mu(A, D); // throws unless a bijective order-reversal
        CHECK(static_cast<int>(mu.size()) == A.size());
        CHECK(A.size() == D.size() - 1);
        std::set<int> image(mu.begin(), mu.end());
        CHECK(static_cast<int>(image.size()) == A.size());
        CHECK(image.count(D.bottom()) == 0);
    }

    std::mt19937_64 rng(23);
    for (int t = 0; t < 20; ++t) {
        MonomialIdeal I = mct_test::random_squarefree_ideal(rng);
        mct::IntersectionLattice A = mct::IntersectionLattice::build(I);
        LcmLattice D = LcmLattice::build(mct::alexander_dual(I));
        CHECK_NOTHROW(mct::duality_mu(A, D));
    }
}

TEST_CASE("intersection lattice requires square-free input") {
    CHECK_THROWS_AS(mct::IntersectionLattice::build(MonomialIdeal::parse("x^2")), mct::error);
}
