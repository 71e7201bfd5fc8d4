#include <doctest.h>

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "mct/betti.hpp"
#include "mct/errors.hpp"
#include "mct/fixtures.hpp"
#include "mct/ideal.hpp"
#include "mct/monomial.hpp"
#include "test_util.hpp"

using mct::BettiTable;
using mct::MonomialIdeal;
using mct::Subject;

TEST_CASE("Koszul resolutions: betti numbers are binomial coefficients") {
    for (int n : {1, 2, 3}) {
        MonomialIdeal I = mct::fixture("koszul(" + std::to_string(n) + ")");
        const int N = n + 1;
        BettiTable Q = mct::betti_gpw(I, 2, Subject::quotient);
        long long binom = 1;
        for (int i = 0; i <= N; ++i) {
            CHECK(Q.graded(i, i) == static_cast<int>(binom));
            binom = binom * (N - i) / (i + 1);
        }
        CHECK(mct::projdim(Q) == N);
        CHECK(mct::regularity(Q) == 0);

        BettiTable T = mct::betti_gpw(I, 2, Subject::ideal);
        CHECK(T.graded(0, 1) == N);
        CHECK(mct::projdim(T) == N - 1);
    }
}

TEST_CASE("triangle betti table is characteristic independent") {
    MonomialIdeal T = mct::fixture("triangle");
    for (int ell : {2, 3, 5, 7}) {
        BettiTable B = mct::betti_gpw(T, ell, Subject::ideal);
        CHECK(B.graded(0, 2) == 3);
        CHECK(B.graded(1, 3) == 2);
        CHECK(B.graded_entries().size() == 2);
        CHECK(mct::projdim(B) == 1);
        CHECK(mct::regularity(B) == 2);
        CHECK(mct::extremal_betti(B) == mct::ExtremalSet{{1, 3}});
    }
}

TEST_CASE("multigraded entries sit on lattice elements") {
    MonomialIdeal T = mct::fixture("triangle");
    BettiTable B = mct::betti_gpw(T, 2, Subject::quotient);
    // beta_{0,1} = 1, beta_{1,m} = 1 at each generator, beta_{2,xyz} = 2
    CHECK(B.multigraded(0, mct::Monomial::one(3)) == 1);
    for (const auto& g : T.generators()) CHECK(B.multigraded(1, g) == 1);
    mct::Monomial xyz = mct::Monomial::variable(3, 0) * mct::Monomial::variable(3, 1) *
                        mct::Monomial::variable(3, 2);
    CHECK(B.multigraded(2, xyz) == 2);
    CHECK(B.multigraded(1, xyz) == 0);

    // graded table aggregates the multigraded one
    std::map<std::pair<int, int>, int> agg;
    for (const auto& [key, d] : B.multigraded_entries())
        agg[{key.first, key.second.degree()}] += d;
    CHECK(agg == B.graded_entries());
}

TEST_CASE("quotient and ideal tables differ by the homological shift") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
        MonomialIdeal I = mct_test::random_ideal(rng);
        for (int ell : {2, 5}) {
            BettiTable Q = mct::betti_gpw(I, ell, Subject::quotient);
            BettiTable T = mct::betti_gpw(I, ell, Subject::ideal);
            for (const auto& [key, d] : T.multigraded_entries())
                CHECK(Q.multigraded(key.first + 1, key.second) == d);
            CHECK(Q.multigraded(0, mct::Monomial::one(I.nvars())) == 1);
            CHECK(T.multigraded_entries().size() + 1 == Q.multigraded_entries().size());
        }
    }
}

TEST_CASE("reisner betti tables: characteristic 2 versus odd") {
    MonomialIdeal R = mct::fixture("reisner");

    BettiTable Q2 = mct::betti_gpw(R, 2, Subject::quotient);
    CHECK(Q2.graded(0, 0) == 1);
    CHECK(Q2.graded(1, 3) == 10);
    CHECK(Q2.graded(2, 4) == 15);
    CHECK(Q2.graded(3, 5) == 6);
    CHECK(Q2.graded(3, 6) == 1);
    CHECK(Q2.graded(4, 6) == 1);
    CHECK(Q2.graded_entries().size() == 6);
    CHECK(mct::projdim(Q2) == 4);
    CHECK(mct::regularity(Q2) == 3);

    for (int ell : {3, 5, 7}) {
        BettiTable Q = mct::betti_gpw(R, ell, Subject::quotient);
        CHECK(Q.graded(0, 0) == 1);
        CHECK(Q.graded(1, 3) == 10);
        CHECK(Q.graded(2, 4) == 15);
        CHECK(Q.graded(3, 5) == 6);
        CHECK(Q.graded_entries().size() == 4);
        CHECK(mct::projdim(Q) == 3);
        CHECK(mct::regularity(Q) == 2);
    }
}

TEST_CASE("extremal betti positions") {
    MonomialIdeal R = mct::fixture("reisner");
    CHECK(mct::extremal_betti(mct::betti_gpw(R, 2, Subject::ideal)) ==
          mct::ExtremalSet{{2, 6}, {3, 6}});
    CHECK(mct::extremal_betti(mct::betti_gpw(R, 5, Subject::ideal)) ==
          mct::ExtremalSet{{2, 5}});
    CHECK(mct::extremal_betti(mct::betti_gpw(R, 2, Subject::quotient)) ==
          mct::ExtremalSet{{3, 6}, {4, 6}});

    // dominance: every nonzero entry is dominated by some extremal position;
    // extremal positions are pairwise incomparable under (k >= i, l-k >= j-i)
    std::mt19937_64 rng(17);
    for (int t = 0; t < 15; ++t) {
        BettiTable B = mct::betti_gpw(mct_test::random_ideal(rng), 3, Subject::ideal);
        auto ext = mct::extremal_betti(B);
        for (const auto& [pos, d] : B.graded_entries()) {
            (void)d;
            bool dominated = false;
            for (const auto& [k, l] : ext)
                if (k >= pos.first && l - k >= pos.second - pos.first) dominated = true;
            CHECK(dominated);
        }
        for (const auto& a : ext)
            for (const auto& b : ext)
                if (a != b) {
                    const bool dominates =
                        b.first >= a.first && b.second - b.first >= a.second - a.first;
                    CHECK_FALSE(dominates);
                }
    }
}

TEST_CASE("taylor oracle agrees with the lattice route") {
    std::vector<MonomialIdeal> subjects{mct::fixture("triangle"), mct::fixture("principal"),
                                        mct::fixture("koszul(2)"), mct::fixture("bipartite6")};
    std::mt19937_64 rng(29);
    for (int t = 0; t < 15; ++t) subjects.push_back(mct_test::random_squarefree_ideal(rng));
    for (int t = 0; t < 10; ++t) subjects.push_back(mct_test::random_ideal(rng, 4, 5));

    for (const auto& I : subjects) {
        for (int ell : {2, 3, 5}) {
            CHECK(mct::betti_gpw(I, ell, Subject::ideal) ==
                  mct::betti_taylor_oracle(I, ell, Subject::ideal));
            CHECK(mct::betti_gpw(I, ell, Subject::quotient) ==
                  mct::betti_taylor_oracle(I, ell, Subject::quotient));
        }
    }
}

TEST_CASE("duality bridge: top of I against the dual quotient") {
    std::vector<MonomialIdeal> subjects{mct::fixture("triangle"), mct::fixture("bipartite6"),
                                        mct::fixture("reisner"), mct::fixture("z1")};
    std::mt19937_64 rng(31);
    for (int t = 0; t < 15; ++t) subjects.push_back(mct_test::random_squarefree_ideal(rng));
    for (const auto& I : subjects) {
        MonomialIdeal D = mct::alexander_dual(I);
        for (int ell : {2, 3, 5}) {
            BettiTable TI = mct::betti_gpw(I, ell, Subject::ideal);
            BettiTable QD = mct::betti_gpw(D, ell, Subject::quotient);
            CHECK(mct::max_i_plus_j(TI) == mct::max_2j_minus_i(QD));
        }
    }
}

TEST_CASE("betti rejects bad input") {
    MonomialIdeal T = mct::fixture("triangle");
    CHECK_THROWS_AS(mct::betti_gpw(T, 4, Subject::ideal), mct::error);
    CHECK_THROWS_AS(mct::betti_gpw(MonomialIdeal::zero({"x", "y"}), 2, Subject::ideal), mct::error);
    CHECK_THROWS_AS(mct::betti_gpw(MonomialIdeal::unit({"x", "y"}), 2, Subject::ideal), mct::error);

    // the subset oracle is capped at 20 generators
    std::vector<mct::Monomial> many;
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b)
            for (int c = b + 1; c < 7; ++c) {
                if (many.size() == 21) break;
                many.push_back(mct::squarefree_from_mask(7, (1u << a) | (1u << b) | (1u << c)));
            }
    MonomialIdeal big = MonomialIdeal::from_generators(mct_test::var_names(7), many);
    REQUIRE(big.generator_count() == 21);
    CHECK_THROWS_AS(mct::betti_taylor_oracle(big, 2), mct::size_error);
}

TEST_CASE("betti diagram rendering") {
    CHECK(mct::betti_diagram(mct::betti_gpw(mct::fixture("triangle"), 2, Subject::ideal)) ==
          "       0 1\n"
          "total: 3 2\n"
          "    2: 3 2\n");
    BettiTable empty(2, Subject::ideal, 2, {});
    CHECK(empty.empty());
    CHECK_THROWS_AS(mct::projdim(empty), mct::error);
    CHECK_THROWS_AS(mct::regularity(empty), mct::error);
}
